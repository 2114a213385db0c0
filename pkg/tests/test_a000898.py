import mpmath
import pytest

from egfasym import (
    A000898,
    DomainError,
    a_of_r,
    closed_form_estimate,
    exact_terms,
    expansion_report,
    hayman_coefficient_estimate,
    recurrence_a000898,
    rn_closed,
    rn_expansion,
)

# bands frozen from calibration runs at n = 1e2..1e5 (bits = 256)
RN_EXPANSION_SCALED = (0.021, 0.023)  # (expansion - closed) * n^1.5 -> sqrt(2)/64
LN_F_SCALED = (0.005, 0.02)  # remainder(ln f) * n, observed 0.0132..0.0155
N_LN_R_SCALED = (-0.002, 0.0)  # remainder(n ln r) * n, observed -1.3e-3..-4e-5
SQRT_B_SCALED = (0.18, 0.20)  # relative remainder(sqrt b) * n, observed 0.1876..0.1918
CLOSED_SCALED = (0.09, 0.11)  # (I*/I - 1) * n, observed 0.0973..0.0992
PIPELINE_GAP = 0.1  # |ln hayman - ln closed| * n, observed 0.063..0.069


def test_rn_closed_examples(ctx):
    assert mpmath.nstr(rn_closed(1, ctx), 5) == "0.36603"
    assert mpmath.nstr(rn_closed(100, ctx), 6) == "6.58872"
    assert mpmath.nstr(rn_closed(10**4, ctx), 6) == "70.2124"
    with pytest.raises(DomainError):
        rn_closed(0, ctx)


@pytest.mark.parametrize("n", [1, 10, 100, 10**3, 10**4, 10**5])
def test_rn_closed_solves_saddle_equation(ctx, n):
    with ctx.workprec():
        assert abs(a_of_r(A000898, rn_closed(n, ctx)) - n) <= n * ctx.eps(8)


def test_rn_expansion_examples(ctx):
    assert mpmath.nstr(rn_expansion(100, ctx), 6) == "6.58875"
    assert mpmath.nstr(rn_expansion(1, ctx), 5) == "0.38388"
    with ctx.workprec():
        gap100 = rn_expansion(100, ctx) - rn_closed(100, ctx)
        assert 2.2e-5 < gap100 < 2.21e-5
        assert abs(rn_expansion(10**4, ctx) - rn_closed(10**4, ctx)) < 1e-5
    assert mpmath.nstr(rn_expansion(10**4, ctx), 7) == "70.21245"


@pytest.mark.parametrize("n", [10**2, 10**3, 10**4, 10**5])
def test_rn_expansion_order(ctx, n):
    with ctx.workprec():
        scaled = (rn_expansion(n, ctx) - rn_closed(n, ctx)) * mpmath.mpf(n) ** 1.5
    lo, hi = RN_EXPANSION_SCALED
    assert lo < scaled < hi


def test_expansion_report_n1e4(ctx):
    rep = expansion_report(10**4, ctx)
    n = rep.n
    assert -10 <= rep.remainder_ln_f * n <= 10
    assert -10 <= rep.remainder_n_ln_r * n <= 10
    assert 0 < abs(rep.relative_remainder_sqrt_b) * n < 10
    assert len(rep.remainders) == 3


@pytest.mark.parametrize("n", [10**3, 3 * 10**3, 10**4, 3 * 10**4, 10**5])
def test_expansion_report_bands(ctx, n):
    rep = expansion_report(n, ctx)
    assert LN_F_SCALED[0] < rep.remainder_ln_f * n < LN_F_SCALED[1]
    assert N_LN_R_SCALED[0] < rep.remainder_n_ln_r * n < N_LN_R_SCALED[1]
    assert SQRT_B_SCALED[0] < rep.relative_remainder_sqrt_b * n < SQRT_B_SCALED[1]


def test_expansion_report_direct_values(ctx):
    rep = expansion_report(100, ctx)
    r = rn_closed(100, ctx)
    with ctx.workprec():
        assert rep.direct_ln_f == r * r + 2 * r
        # ln f(r_n) = n/2 + r_n exactly, since 2r^2 + 2r = n
        assert abs(rep.direct_ln_f - (50 + r)) < ctx.eps(10)
        assert rep.direct_sqrt_b == mpmath.sqrt(4 * r * r + 2 * r)
    with pytest.raises(DomainError):
        expansion_report(9, ctx)


def test_closed_form_examples(ctx):
    assert closed_form_estimate(100, True, ctx).value.render(5) == "1.3520e+99"
    assert closed_form_estimate(10**5, True, ctx).value.render(5) == "4.2763e+243530"
    assert closed_form_estimate(10**5, True, ctx).value.render(7) == "4.276313e+243530"
    corr = closed_form_estimate(100, True, ctx).value
    base = closed_form_estimate(100, False, ctx).value
    with ctx.workprec():
        ratio = mpmath.exp(corr.ln - base.ln)
        assert abs(ratio - (1 + mpmath.sqrt(2) / 30)) < ctx.eps(8)
    assert mpmath.nstr(ratio, 5) == "1.0471"


@pytest.mark.parametrize("n", [1, 7, 1000, 10**5])
def test_closed_form_formula(ctx, n):
    est = closed_form_estimate(n, True, ctx)
    with ctx.workprec():
        N = mpmath.mpf(n)
        # product form, evaluated directly at small n as an independent check
        direct = (
            mpmath.sqrt(2 * N) - mpmath.log(2 * mpmath.e) / 2
            + (N / 2) * mpmath.log(2 * N / mpmath.e)
            + mpmath.log(1 + mpmath.sqrt(2) / (3 * mpmath.sqrt(N)))
        )
        assert abs(est.value.ln - direct) <= abs(direct) * ctx.eps(8) + ctx.eps(8)
    assert est.with_correction and est.n == n


def test_closed_form_n1(ctx):
    v = closed_form_estimate(1, True, ctx).value
    with ctx.workprec():
        direct = (
            mpmath.exp(mpmath.sqrt(2)) / mpmath.sqrt(2 * mpmath.e)
            * mpmath.sqrt(2 / mpmath.e) * (1 + mpmath.sqrt(2) / 3)
        )
    assert v.render(5) == mpmath.nstr(direct, 5) + "e+0"


def test_recurrence_examples():
    assert recurrence_a000898(4).terms == (1, 2, 6, 20, 76)
    assert recurrence_a000898(1).terms == (1, 2)
    assert recurrence_a000898(0).terms == (1,)
    assert recurrence_a000898(9)[9] == 168992


def test_dual_path_equality():
    assert recurrence_a000898(2000).terms == exact_terms(A000898, 2000).terms


@pytest.mark.parametrize("n", [10**3, 10**4, 10**5])
def test_closed_form_error_order(ctx, a000898_exact, n):
    est = closed_form_estimate(n, True, ctx).value
    with ctx.workprec():
        scaled = mpmath.expm1(est.ln - mpmath.log(a000898_exact[n])) * n
    assert CLOSED_SCALED[0] < abs(scaled) < CLOSED_SCALED[1]


@pytest.mark.parametrize("n", [10**3, 10**4, 10**5])
def test_correction_coefficient_trend(ctx, a000898_exact, n):
    base = closed_form_estimate(n, False, ctx).value
    with ctx.workprec():
        coef = mpmath.expm1(mpmath.log(a000898_exact[n]) - base.ln) * mpmath.sqrt(n)
        target = mpmath.sqrt(2) / 3
    # approaches sqrt(2)/3 from below like 1/sqrt(n)
    assert 0 < target - coef < 0.35 / mpmath.sqrt(n)


@pytest.mark.parametrize("n", [10**3, 4000, 10**4])
def test_hayman_and_closed_form_agree(ctx, n):
    h = hayman_coefficient_estimate(A000898, n, ctx).ln_count
    c = closed_form_estimate(n, True, ctx).value
    assert abs(h.ln - c.ln) * n <= PIPELINE_GAP

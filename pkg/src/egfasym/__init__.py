"""Exact terms and saddle-point asymptotics for sequences with EGF exp(P(z)).

The package is organised as

* :mod:`egfasym.egf`      exact integer terms, series oracle, integer rendering
* :mod:`egfasym.numerics` precision contexts, log-domain values, ln(n!)
* :mod:`egfasym.saddle`   Hayman saddle-point estimates for exp(P(z))
* :mod:`egfasym.a000898`  closed forms for P(z) = z^2 + 2z
* :mod:`egfasym.compare`  exact-vs-estimate tables and error-order fits
* :mod:`egfasym.cli`      command-line front end
"""

from egfasym.errors import (
    ConvergenceError,
    DomainError,
    EgfError,
    ParseError,
    PrecisionError,
)
from egfasym.egf import (
    ExactSequence,
    ExpPolynomial,
    exact_terms,
    iter_terms,
    parse_poly,
    render_int_scientific,
    series_exp_oracle,
    terms_at,
)
from egfasym.numerics import (
    LnValue,
    PrecisionContext,
    ln_factorial,
    render_ln_scientific,
)
from egfasym.saddle import (
    HaymanEstimate,
    SaddlePoint,
    a_of_r,
    b_of_r,
    hayman_coefficient_estimate,
    solve_saddle,
)
from egfasym.a000898 import (
    A000898,
    ClosedFormEstimate,
    ExpansionReport,
    closed_form_estimate,
    expansion_report,
    recurrence_a000898,
    rn_closed,
    rn_expansion,
)
from egfasym.compare import (
    ComparisonRow,
    ErrorOrderFit,
    compare_rows,
    fit_error_order,
)

__version__ = "0.1.0"

import pytest

from egfasym import A000898, PrecisionContext, terms_at

# acceptance outcomes, (criterion, passed, detail); printed at session end
ACCEPTANCE_LOG = []

TABLE_NS = (100, 250, 1000, 4000, 10**4, 10**5)


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext()


@pytest.fixture(scope="session")
def a000898_exact():
    """Exact A000898 terms at the table points, one shared recurrence pass."""
    return terms_at(A000898, TABLE_NS)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

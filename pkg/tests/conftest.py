import numpy as np
import pytest


def beta_by_clauses(n, R, lo, hi):
    """Weights on [lo, hi] enumerated straight from the two block clauses.

    Every index covered by both clauses is checked for agreement.
    """
    table = {}
    lmin = lo // (2 * n) - 1
    lmax = hi // (2 * n) + 1
    for l in range(lmin, lmax + 1):
        for q in range(n + 1):
            for k, val in ((2 * l * n + q, R**q), ((2 * l + 1) * n + q, R ** (n - q))):
                if k in table:
                    assert table[k] == pytest.approx(val, rel=1e-15)
                table[k] = val
    return np.array([table[k] for k in range(lo, hi + 1)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

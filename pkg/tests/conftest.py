"""Shared fixtures and the acceptance-criteria summary hook."""

import numpy as np
import pytest

from nilword import PrimeField, catalog

# one line per acceptance criterion, echoed after the test summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def p3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def p5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def p7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def entries3(p3):
    return catalog.default_entries(p3)


@pytest.fixture(scope="session")
def entries5(p5):
    return catalog.default_entries(p5)


def random_invertible(rng: np.random.Generator, n: int, p: int) -> np.ndarray:
    """Uniform-ish invertible matrix over F_p by rejection sampling."""
    from nilword.linalg import rank

    while True:
        m = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if rank(m, p) == n:
            return m


def exhaustive_breadth_invariance(L) -> None:
    """Assert b(cx) = b(x) = b(x+z) for every x, unit c, central z.

    Exhaustive over all p^dim vectors; callers keep dim small.
    """
    from nilword.linalg import coefficient_grid, rank

    p, n = L.p, L.dim
    vecs = coefficient_grid(p, n)
    ads = np.einsum("bi,ijk->bjk", vecs, L.sc) % p
    ranks = np.array([rank(a, p) for a in ads])
    pw = p ** np.arange(n, dtype=np.int64)
    lookup = np.empty(p ** n, dtype=np.int64)
    lookup[vecs @ pw] = ranks
    for c in range(2, p):
        assert np.array_equal(lookup[(vecs * c % p) @ pw], ranks)
    for z in L.center().enumerate():
        assert np.array_equal(lookup[((vecs + z) % p) @ pw], ranks)

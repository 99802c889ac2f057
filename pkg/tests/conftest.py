import pytest
from hypothesis import strategies as st

from skewcenter import validate_and_normalize
from skewcenter.errors import CommutativeRing

SIXTH_ROOT = [[0, 1, 1, 3], [-1, 0, 1, 3], [-1, -1, 0, 3], [-3, -3, -3, 0]]
CY3 = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]
HYPER = [[0, 0, 1], [0, 0, -1], [-1, 1, 0]]
COPRIME30 = [[0, 15, 10], [-15, 0, 6], [-10, -6, 0]]


def ell24(k):
    return validate_and_normalize([[0, 4, 6], [-4, 0, k], [-6, -k, 0]], 24)


@pytest.fixture
def sixth_root():
    return validate_and_normalize(SIXTH_ROOT, 6)


@pytest.fixture
def cy3():
    return validate_and_normalize(CY3, 3)


@pytest.fixture
def hyper5():
    return validate_and_normalize(HYPER, 5)


@pytest.fixture
def coprime30():
    return validate_and_normalize(COPRIME30, 30)


@pytest.fixture
def plane4():
    return validate_and_normalize([[0, 1], [-1, 0]], 4)


@st.composite
def skew_params(draw, max_n=4, max_ell=12):
    """Valid minimal parameters; commutative draws are rejected."""
    n = draw(st.integers(2, max_n))
    ell = draw(st.integers(2, max_ell))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = draw(st.integers(0, ell - 1))
            b[j][i] = -b[i][j]
    try:
        return validate_and_normalize(b, ell)
    except CommutativeRing:
        from hypothesis import assume

        assume(False)

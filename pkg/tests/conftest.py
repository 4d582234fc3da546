import random

import pytest
from hypothesis import strategies as st

from qginv.exactq import ZERO, I, J, K, Quaternion
from qginv.qmatrix import QMatrix

# pass/fail lines recorded by test_acceptance, printed once at the end
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture
def A4():
    """The 3x3 worked-example matrix."""
    return QMatrix([[ZERO, K, ZERO], [I, ZERO, -J], [ZERO, J, ZERO]])


@pytest.fixture
def rng():
    return random.Random(12345)


small = st.integers(min_value=-3, max_value=3)
quaternions = st.builds(Quaternion, small, small, small, small)


@st.composite
def matrices(draw, min_size=1, max_size=3, square=False):
    m = draw(st.integers(min_size, max_size))
    n = m if square else draw(st.integers(min_size, max_size))
    zero_bias = draw(st.sampled_from([0.0, 0.3, 0.6]))
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if draw(st.floats(0, 1)) < zero_bias:
                row.append(ZERO)
            else:
                row.append(draw(quaternions))
        rows.append(row)
    return QMatrix(rows, m, n)

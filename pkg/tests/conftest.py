import math

import numpy as np
import pytest
from hypothesis import strategies as st

from kli import Quaternion, UnitQuaternion

R_DIAG = UnitQuaternion(0.5, 0.5, 0.5, 0.5)
K = UnitQuaternion(0.0, 0.0, 0.0, 1.0)


def su2(q):
    """2x2 complex matrix of a quaternion; matrix products mirror Hamilton products."""
    a, b, c, d = q.as_tuple() if hasattr(q, "as_tuple") else q
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def from_su2(m):
    return Quaternion(m[0, 0].real, m[0, 0].imag, m[0, 1].real, m[0, 1].imag)


def random_unit(rng, n=None):
    v = rng.normal(size=(4,) if n is None else (n, 4))
    v /= np.linalg.norm(v, axis=-1, keepdims=True)
    if n is None:
        return UnitQuaternion(*v)
    return [UnitQuaternion(*row) for row in v]


def random_pair(rng, lo, hi):
    """Random unit pair with lo < dot(p, r) < hi."""
    while True:
        p, r = random_unit(rng, 2)
        c = sum(a * b for a, b in zip(p, r))
        if lo < c < hi:
            return p, r


@pytest.fixture
def rng():
    return np.random.default_rng(20211)


coords = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def unit_quaternions(draw):
    v = draw(st.tuples(coords, coords, coords, coords).filter(
        lambda t: math.sqrt(sum(x * x for x in t)) > 0.1))
    n = math.sqrt(sum(x * x for x in v))
    return UnitQuaternion(*(x / n for x in v))


@st.composite
def quaternions(draw, bound=10.0):
    c = st.floats(-bound, bound, allow_nan=False)
    return Quaternion(draw(c), draw(c), draw(c), draw(c))


_CRITERIA = {
    "test_ac1": "AC1 convergence time 11.66 +/- 0.01",
    "test_ac2": "AC2 published q(t) samples within +/-0.005",
    "test_ac3": "AC3 RK4 vs closed form < 1e-7",
    "test_ac4": "AC4 sphere preservation <= 1e-9",
    "test_ac5": "AC5 KLI-SLERP path deviation < 1e-6 rad",
    "test_ac6": "AC6 SLERP endpoints 1e-15, two forms 1e-12",
    "test_ac7": "AC7 Hopf unit image, fiber invariance, examples",
    "test_ac8": "AC8 degenerate inputs and exit codes",
    "test_ac9": "AC9 CLI end-to-end reproduction",
}


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" not in getattr(rep, "nodeid", "") or rep.when != "call":
                continue
            name = rep.nodeid.split("::")[-1]
            key = name[:8]
            lines.append((key, f"{'PASS' if outcome == 'passed' else 'FAIL'}  {_CRITERIA.get(key, name)}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kli import (
    AxisAngle,
    NearZeroQuaternion,
    NonUnitQuaternion,
    Quaternion,
    UnitQuaternion,
    conjugate,
    dot,
    from_axis_angle,
    multiply,
    norm,
    normalize,
    power,
    rotate_vector,
    to_axis_angle,
)

from conftest import K, coords, R_DIAG, from_su2, quaternions, random_unit, su2, unit_quaternions


def close(a, b, tol):
    return max(abs(x - y) for x, y in zip(a, b)) <= tol


def test_k_times_i_is_j():
    assert multiply(Quaternion(0, 0, 0, 1), Quaternion(0, 1, 0, 0)).as_tuple() == (0, 0, 1, 0)


def test_defining_relations():
    i, j, k = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)
    minus_one = (-1, 0, 0, 0)
    assert (i * i).as_tuple() == minus_one
    assert (j * j).as_tuple() == minus_one
    assert (k * k).as_tuple() == minus_one
    assert (i * j * k).as_tuple() == minus_one


def test_conj_k_times_r():
    out = multiply(conjugate(K), R_DIAG)
    assert out.as_tuple() == (0.5, 0.5, -0.5, -0.5)
    assert close(out, from_su2(su2(conjugate(K)) @ su2(R_DIAG)), 1e-15)


@given(quaternions(), quaternions())
def test_multiply_matches_su2_oracle(p, q):
    assert close(multiply(p, q), from_su2(su2(p) @ su2(q)), 1e-12 * (1 + norm(p) * norm(q)))


@given(quaternions())
def test_identity_element(q):
    assert multiply(Quaternion(1, 0, 0, 0), q) == q
    assert multiply(q, Quaternion(1, 0, 0, 0)) == q


def test_norm_multiplicative_random_pairs(rng):
    for _ in range(1000):
        p = Quaternion(*rng.normal(size=4) * 3)
        q = Quaternion(*rng.normal(size=4) * 3)
        assert norm(p * q) == pytest.approx(norm(p) * norm(q), rel=1e-12)


def test_conjugate():
    assert conjugate(R_DIAG).as_tuple() == (0.5, -0.5, -0.5, -0.5)


@given(quaternions())
def test_conjugate_involution_and_product(q):
    assert conjugate(conjugate(q)) == q
    prod = multiply(q, conjugate(q))
    n2 = dot(q, q)
    assert prod.w == pytest.approx(n2, rel=1e-12, abs=1e-300)
    assert close(prod.vector, (0, 0, 0), 1e-12 * max(1.0, n2))


@given(unit_quaternions())
def test_unit_inverse(q):
    assert close(multiply(q, conjugate(q)), (1, 0, 0, 0), 1e-12)
    assert close(multiply(conjugate(q), q), (1, 0, 0, 0), 1e-12)


@given(quaternions(), quaternions(), quaternions())
def test_associativity(p, q, r):
    scale = 1 + norm(p) * norm(q) * norm(r)
    assert close((p * q) * r, p * (q * r), 1e-12 * scale)


def test_dot():
    assert dot(K, R_DIAG) == 0.5
    assert dot(R_DIAG, R_DIAG) == 1.0
    p, q = Quaternion(1, 2, 3, 4), Quaternion(-2, 0.5, 7, 1)
    assert dot(p, q) == dot(q, p) == 24.0


@pytest.mark.parametrize("q, expected", [((0, 0, 0, 1), 1.0), ((1, 1, 1, 1), 2.0), ((0.5,) * 4, 1.0)])
def test_norm(q, expected):
    assert norm(Quaternion(*q)) == expected


@pytest.mark.parametrize(
    "q, expected", [((0, 0, 0, 2), (0, 0, 0, 1)), ((1, 1, 1, 1), (0.5, 0.5, 0.5, 0.5))]
)
def test_normalize(q, expected):
    out = normalize(Quaternion(*q))
    assert isinstance(out, UnitQuaternion)
    assert out.as_tuple() == expected


def test_normalize_zero():
    with pytest.raises(NearZeroQuaternion):
        normalize(Quaternion(0, 0, 0, 0))
    with pytest.raises(NearZeroQuaternion):
        normalize(Quaternion(1e-13, 0, 0, 0))


@given(quaternions(bound=1e6).filter(lambda q: norm(q) > 1e-6))
def test_normalize_unit(q):
    assert abs(norm(normalize(q)) - 1) <= 2e-15


def test_unit_construction_tolerance():
    q = UnitQuaternion(0, 0, 0, 1 + 5e-7)
    assert q.as_tuple() == (0, 0, 0, 1)
    with pytest.raises(NonUnitQuaternion):
        UnitQuaternion(0, 0, 0, 1 + 2e-6)
    with pytest.raises(NearZeroQuaternion):
        UnitQuaternion(0, 0, 0, 0)
    with pytest.raises(ValueError):
        Quaternion(float("nan"), 0, 0, 0)


def test_power_endpoints(rng):
    for q in random_unit(rng, 50):
        assert close(power(q, 0), (1, 0, 0, 0), 0)
        assert close(power(q, 1), q, 1e-15)


def test_power_half_of_i():
    h = power(UnitQuaternion(0, 1, 0, 0), 0.5)
    s = math.sqrt(2) / 2
    assert close(h, (s, s, 0, 0), 1e-15)
    # independent check: the square root squared gives back i
    assert close(h * h, (0, 1, 0, 0), 1e-15)


def test_power_of_minus_one_uses_x_axis():
    assert close(power(UnitQuaternion(-1, 0, 0, 0), 0.5), (0, 1, 0, 0), 1e-15)


def test_power_repeated_roots(rng):
    # q^(1/4) multiplied by itself four times returns q
    for q in random_unit(rng, 100):
        r = power(q, 0.25)
        assert close(r * r * r * r, q, 1e-12)


@given(unit_quaternions(), st.floats(0, 1), st.floats(0, 1))
def test_power_additive(q, s, t):
    assert close(power(q, s) * power(q, t), power(q, s + t), 1e-10)


def test_axis_angle_examples():
    aa = to_axis_angle(K)
    assert close(aa.axis, (0, 0, 1), 0) and aa.angle == pytest.approx(math.pi, abs=1e-15)
    aa = to_axis_angle(UnitQuaternion(1, 0, 0, 0))
    assert aa.angle == 0 and aa.axis == (1.0, 0.0, 0.0)
    aa = to_axis_angle(R_DIAG)
    s3 = 1 / math.sqrt(3)
    assert close(aa.axis, (s3, s3, s3), 1e-15)
    assert aa.angle == pytest.approx(2 * math.pi / 3, abs=1e-15)


@given(
    st.tuples(coords, coords, coords).filter(
        lambda v: math.sqrt(sum(x * x for x in v)) > 0.1
    ),
    st.floats(1e-6, 2 * math.pi - 1e-6),
)
def test_axis_angle_round_trip(axis, angle):
    n = math.sqrt(sum(x * x for x in axis))
    axis = tuple(x / n for x in axis)
    q = from_axis_angle(AxisAngle(axis, angle))
    aa = to_axis_angle(q)
    assert 0 <= aa.angle < 2 * math.pi
    assert aa.angle == pytest.approx(angle, abs=1e-12)
    assert close(aa.axis, axis, 1e-9 / math.sin(angle / 2))
    assert close(from_axis_angle(aa), q, 1e-12)


def test_rotate_vector_examples():
    v = (0.3, -1.2, 2.5)
    assert rotate_vector(UnitQuaternion(1, 0, 0, 0), v) == v
    assert close(rotate_vector(K, (1, 0, 0)), (-1, 0, 0), 1e-15)


def test_rotate_vector_matches_su2(rng):
    for q in random_unit(rng, 200):
        v = rng.normal(size=3)
        m = su2(q) @ su2((0, *v)) @ su2(conjugate(q))
        expected = from_su2(m).vector
        assert close(rotate_vector(q, v), expected, 1e-12)


@given(unit_quaternions(), st.tuples(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5)))
def test_rotate_vector_isometry(q, v):
    assert np.linalg.norm(rotate_vector(q, v)) == pytest.approx(np.linalg.norm(v), abs=1e-12)


def test_negation_keeps_unit_type():
    assert isinstance(-R_DIAG, UnitQuaternion)
    assert (-R_DIAG).as_tuple() == (-0.5,) * 4

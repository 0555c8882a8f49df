import cmath
import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpzeros import CubicRoots, DomainError, agm, carlson_rf, solve_depressed_cubic
from wpzeros.numerics import ccbrt, csqrt

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)


def residual(t, p, q):
    return abs(t ** 3 + p * t + q)


def test_principal_branches():
    assert csqrt(complex(-4, -0.0)) == 2j
    assert cmath.phase(ccbrt(-8)) == pytest.approx(math.pi / 3)
    assert ccbrt(-8) == pytest.approx(2 * cmath.exp(1j * math.pi / 3))
    assert ccbrt(27) == pytest.approx(3)


def test_cubic_triple_zero():
    assert tuple(solve_depressed_cubic(0, 0)) == (0, 0, 0)


def test_cubic_xi_example():
    # a from (g2, g3) = (7, 3); xi = k^2 + 1/k^2 - 1 = 4.2 for k^2 = 1/5
    a = 6.75 * 343 / (27 * 9 - 343)
    assert a == pytest.approx(-23.1525, rel=1e-15)
    assert 4.2 ** 3 + a * 4.2 - a == pytest.approx(0, abs=1e-12)
    roots = solve_depressed_cubic(a, -a)
    assert roots.r1 == pytest.approx(4.2, abs=1e-12)
    assert sorted(r.real for r in roots) == pytest.approx([-5.25, 1.05, 4.2], abs=1e-12)


def test_cubic_e_roots_of_7_3():
    roots = solve_depressed_cubic(-7 / 4, -3 / 4)
    for t in (1.5, -0.5, -1.0):
        assert 4 * t ** 3 - 7 * t - 3 == 0
    assert sorted(r.real for r in roots) == pytest.approx([-1.0, -0.5, 1.5], abs=1e-14)
    assert all(abs(r.imag) < 1e-14 for r in roots)


def test_cubic_repeated_root_uses_trig_form():
    # (t - 1)^2 (t + 2) = t^3 - 3t + 2
    roots = solve_depressed_cubic(-3, 2)
    assert sorted(r.real for r in roots) == pytest.approx([-2, 1, 1], abs=1e-7)


def test_cubic_random_corpus():
    rng = random.Random(7)
    for _ in range(1000):
        p = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        q = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        roots = solve_depressed_cubic(p, q)
        scale = max(1, abs(p), abs(q))
        assert max(residual(t, p, q) for t in roots) < 1e-9 * scale
        assert abs(sum(roots)) < 1e-11


@given(finite, finite)
def test_cubic_real_coefficients(p, q):
    roots = solve_depressed_cubic(p, q)
    scale = max(1, abs(p), abs(q))
    for t in roots:
        assert residual(t, p, q) < 1e-10 * scale
    assert abs(sum(roots)) < 1e-12 * max(1, *(abs(t) for t in roots))


def test_cubic_rho_one_is_first():
    # three real roots: rho = 1 with principal radicals gives the largest one
    roots = solve_depressed_cubic(-7, 6)  # (t - 1)(t - 2)(t + 3)
    assert roots.r1 == pytest.approx(2)
    assert isinstance(roots, CubicRoots) and len(list(roots)) == 3


def test_cubic_rejects_nan():
    with pytest.raises(DomainError):
        solve_depressed_cubic(float("nan"), 1)


def test_rf_degenerate_cases():
    for x in (0.3, 2.0, 1 + 1j):
        assert carlson_rf(x, x, x) == pytest.approx(complex(x) ** -0.5, rel=1e-14)
    assert carlson_rf(0, 1, 1) == pytest.approx(math.pi / 2, rel=1e-14)


def test_rf_against_agm():
    # R_F(0, k'^2, 1) = K(k) = pi / (2 agm(1, k'))
    assert carlson_rf(0, 0.5, 1) == pytest.approx(math.pi / (2 * agm(1, math.sqrt(0.5))), rel=1e-13)
    assert carlson_rf(0, 0.5, 1).real == pytest.approx(1.8540746773013719, rel=1e-13)


def test_rf_against_mpmath_complex():
    rng = random.Random(3)
    for _ in range(50):
        args = [complex(rng.uniform(0.01, 4), rng.uniform(-3, 3)) for _ in range(3)]
        expected = complex(mpmath.elliprf(*args))
        assert carlson_rf(*args) == pytest.approx(expected, rel=1e-12)


def test_rf_negative_real_argument_is_upper_limit():
    # limit from above: R_F(-1.5 + i0, 0.5, 1)
    expected = complex(mpmath.elliprf(mpmath.mpc(-1.5, 1e-30), 0.5, 1))
    assert carlson_rf(-1.5, 0.5, 1) == pytest.approx(expected, rel=1e-12)


@settings(max_examples=200)
@given(
    st.complex_numbers(min_magnitude=0.05, max_magnitude=20, allow_nan=False, allow_infinity=False),
    st.floats(0.05, 20),
    st.floats(0.05, 20),
)
def test_rf_permutation_symmetry(x, y, z):
    if x.real <= 0 and abs(x.imag) < 1e-3:
        x = complex(abs(x.real) + 0.05, x.imag)
    ref = carlson_rf(x, y, z)
    for perm in ((y, z, x), (z, x, y), (x, z, y), (y, x, z), (z, y, x)):
        assert abs(carlson_rf(*perm) - ref) <= 1e-13 * abs(ref)


def test_rf_two_zeros_rejected():
    with pytest.raises(DomainError):
        carlson_rf(0, 0, 1)


def test_agm_fixed_points():
    assert agm(1, 1) == 1
    for x in (0.1, 3.0, 1e5):
        assert agm(x, x) == x


def test_agm_brute_force_value():
    # 30-digit AGM iteration: 0.946477463801247513...
    with mpmath.workdps(30):
        expected = float(mpmath.agm(1, mpmath.mpf("0.8944272")))
    assert agm(1, 0.8944272) == pytest.approx(expected, rel=1e-14)
    assert agm(1, 0.8944272) == pytest.approx(0.9464774638012475, rel=1e-14)


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_agm_properties(a, b):
    g = agm(a, b)
    assert min(a, b) * (1 - 1e-15) <= g <= max(a, b) * (1 + 1e-15)
    assert agm((a + b) / 2, math.sqrt(a * b)) == pytest.approx(g, rel=1e-14)


@pytest.mark.parametrize("a,b", [(0, 1), (-1, 2), (1, 0)])
def test_agm_domain(a, b):
    with pytest.raises(DomainError):
        agm(a, b)

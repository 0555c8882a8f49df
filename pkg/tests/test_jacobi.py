import cmath
import math
import random

import mpmath
import pytest

from wpzeros import DegenerateLattice, Modulus, PoleProximity, complete_k, inverse_sn, sn_cn_dn
from wpzeros.numerics import agm


def mp_sncndn(u, m):
    return tuple(complex(mpmath.ellipfun(f, u, m)) for f in ("sn", "cn", "dn"))


def test_modulus_fields():
    m = Modulus(0.2)
    assert m.k2 + m.kprime2 == 1
    assert m.k == pytest.approx(math.sqrt(0.2))
    assert m.guaranteed
    assert not Modulus(1.0).guaranteed
    assert not Modulus(0.3 + 0.1j).guaranteed


def test_complete_k_values():
    assert complete_k(0).K == math.pi / 2
    assert math.isinf(complete_k(0).Kprime.real)
    qp = complete_k(0.5)
    assert qp.K.real == pytest.approx(1.8540746773013719, rel=1e-13)
    assert qp.Kprime.real == pytest.approx(1.8540746773013719, rel=1e-13)
    # AGM oracle, and the real part of C * theta0 in the (7, 3) example
    assert complete_k(0.2).K.real == pytest.approx(math.pi / (2 * agm(1, math.sqrt(0.8))), rel=1e-13)
    assert complete_k(0.2).K.real == pytest.approx(1.6596235986105280, rel=1e-13)
    assert complete_k(0.2).K.real == pytest.approx(math.sqrt(2.5) * 1.0496381, abs=1e-6)


def test_complete_k_bounds():
    for k2 in (0.01, 0.3, 0.7, 0.99):
        qp = complete_k(k2)
        assert qp.K.real > math.pi / 2 and qp.Kprime.real > math.pi / 2


def test_complete_k_degenerate():
    with pytest.raises(DegenerateLattice):
        complete_k(1.0)


def test_complete_k_complex_modulus():
    m = 0.3 + 0.4j
    qp = complete_k(m)
    assert qp.K == pytest.approx(complex(mpmath.ellipk(m)), rel=1e-12)
    assert qp.Kprime == pytest.approx(complex(mpmath.ellipk(1 - m)), rel=1e-12)


def test_sn_special_values():
    assert sn_cn_dn(0, 0.5) == (0, 1, 1)
    K = complete_k(0.5).K
    sn, cn, dn = sn_cn_dn(K, 0.5)
    assert sn == pytest.approx(1, abs=1e-14)
    assert cn == pytest.approx(0, abs=1e-14)
    assert dn == pytest.approx(math.sqrt(0.5), abs=1e-14)
    sn, cn, dn = sn_cn_dn(0.7, 0)
    assert (sn, cn, dn) == (pytest.approx(math.sin(0.7)), pytest.approx(math.cos(0.7)), 1)


def test_sn_against_mpmath():
    rng = random.Random(11)
    worst = 0.0
    for _ in range(200):
        m = rng.uniform(0, 0.99)
        u = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        got, want = sn_cn_dn(u, m), mp_sncndn(u, m)
        scale = max(1, *(abs(w) for w in want))
        worst = max(worst, max(abs(g - w) for g, w in zip(got, want)) / scale)
    assert worst < 1e-11


def test_degeneration_to_trig():
    rng = random.Random(5)
    for _ in range(100):
        u = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(u) > 3:
            continue
        sn, cn, dn = sn_cn_dn(u, 0)
        assert abs(sn - cmath.sin(u)) < 1e-12 * max(1, abs(cmath.sin(u)))
        assert abs(cn - cmath.cos(u)) < 1e-12 * max(1, abs(cmath.cos(u)))
        assert abs(dn - 1) < 1e-12


def test_pythagorean_identities():
    rng = random.Random(13)
    for _ in range(500):
        m = rng.uniform(0, 0.99)
        u = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        sn, cn, dn = sn_cn_dn(u, m)
        scale = max(1, abs(sn) ** 2)
        assert abs(sn * sn + cn * cn - 1) < 1e-10 * scale
        assert abs(dn * dn + m * sn * sn - 1) < 1e-10 * scale


def test_periodicity():
    rng = random.Random(17)
    for _ in range(100):
        m = rng.uniform(0.05, 0.95)
        qp = complete_k(m)
        u = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        sn = sn_cn_dn(u, m)[0]
        assert abs(sn_cn_dn(u + 4 * qp.K, m)[0] - sn) < 1e-9 * max(1, abs(sn))
        assert abs(sn_cn_dn(u + 2j * qp.Kprime, m)[0] - sn) < 1e-9 * max(1, abs(sn))


def test_pole_proximity():
    qp = complete_k(0.3)
    with pytest.raises(PoleProximity):
        sn_cn_dn(1j * qp.Kprime, 0.3)
    with pytest.raises(PoleProximity):
        sn_cn_dn(2 * qp.K + 1j * qp.Kprime + 1e-14, 0.3)


def test_best_effort_complex_modulus():
    rng = random.Random(19)
    for _ in range(50):
        m = complex(rng.uniform(-0.5, 1.5), rng.uniform(-1, 1))
        u = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        got, want = sn_cn_dn(u, m), mp_sncndn(u, m)
        scale = max(1, *(abs(w) for w in want))
        assert max(abs(g - w) for g, w in zip(got, want)) < 1e-8 * scale


def test_inverse_sn_trivial():
    assert inverse_sn(0, 0.3) == 0
    assert inverse_sn(1, 0.5) == pytest.approx(complete_k(0.5).K, rel=1e-14)


def test_inverse_sn_beyond_one():
    # quadrature of dt / sqrt((1 - t^2)(1 - t^2/5)) from 0 to sqrt(2.5) along a
    # path through the lower half plane, where the principal roots stay continuous
    expected = 1.659623598610528 - 1.229829442224938j
    u = inverse_sn(math.sqrt(2.5), 0.2)
    assert u == pytest.approx(expected, abs=1e-12)
    # Example 2's theta0 scaled by C = sqrt(2.5)
    assert u == pytest.approx(math.sqrt(2.5) * (1.0496381 - 0.77781243j), abs=1e-6)
    assert sn_cn_dn(u, 0.2)[0] == pytest.approx(math.sqrt(2.5), abs=1e-12)


def test_inverse_sn_quadrature_independent():
    k2, w = 0.2, mpmath.sqrt(2.5)
    f = lambda t: 1 / mpmath.sqrt((1 - t ** 2) * (1 - k2 * t ** 2))
    expected = complex(mpmath.quad(f, [0, 1 - 0.5j, w]))
    assert inverse_sn(math.sqrt(2.5), k2) == pytest.approx(expected, abs=1e-12)


def test_inverse_round_trip():
    rng = random.Random(23)
    done = 0
    while done < 500:
        k2 = rng.uniform(0.05, 0.95)
        r, phi = 2 * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi)
        w = cmath.rect(r, phi)
        k = math.sqrt(k2)
        if min(abs(w - c) for c in (1, -1, 1 / k, -1 / k)) < 1e-3:
            continue
        u = inverse_sn(w, k2)
        assert abs(sn_cn_dn(u, k2)[0] - w) < 1e-8
        done += 1


def test_inverse_principal_strip():
    rng = random.Random(29)
    for _ in range(200):
        k2 = rng.uniform(0.05, 0.95)
        w = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        u = inverse_sn(w, k2)
        qp = complete_k(k2)
        assert abs(u.real) <= qp.K.real * (1 + 1e-12)
        assert abs(u.imag) <= qp.Kprime.real * (1 + 1e-12)

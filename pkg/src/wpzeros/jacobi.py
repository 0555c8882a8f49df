"""Jacobi elliptic layer: moduli, quarter periods, sn/cn/dn and inverse sn.

For real ``k**2`` in [0, 1) (the guaranteed regime) sn, cn, dn are built from
real-argument values by descending Landen (AGM) recursion and the imaginary
part is folded in with the addition theorem.  Any other modulus goes through
a Taylor series plus repeated argument doubling, which is best-effort only.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateLattice, DomainError, PoleProximity
from .numerics import agm, as_complex, carlson_rf, csqrt

POLE_TOL = 1e-12

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus stored through its square ``k2``."""

    k2: complex

    def __post_init__(self):
        object.__setattr__(self, "k2", as_complex(self.k2))

    @property
    def kprime2(self) -> complex:
        return 1 - self.k2

    @property
    def k(self) -> complex:
        return csqrt(self.k2)

    @property
    def guaranteed(self) -> bool:
        """True when k2 is real with 0 <= k2 < 1."""
        return self.k2.imag == 0 and 0 <= self.k2.real < 1


def as_modulus(m) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


@dataclass(frozen=True)
class QuarterPeriods:
    K: complex
    Kprime: complex


def _k_real(m: float) -> float:
    if m >= 1:
        raise DegenerateLattice("K diverges at k^2 = 1")
    return math.pi / (2 * agm(1.0, math.sqrt(1.0 - m)))


def complete_k(m) -> QuarterPeriods:
    """Complete integrals K(k) and K'(k) = K(k').

    Real ``k2`` in [0, 1) uses the AGM; K' is infinite at ``k2 = 0``.  Other
    moduli fall back to ``R_F(0, 1 - k2, 1)`` and ``R_F(0, k2, 1)``.
    """
    m = as_modulus(m)
    if m.guaranteed:
        k2 = m.k2.real
        K = _k_real(k2)
        Kp = math.inf if k2 == 0 else math.pi / (2 * agm(1.0, math.sqrt(k2)))
        return QuarterPeriods(complex(K), complex(Kp))
    if m.k2 in (0, 1):
        raise DegenerateLattice(f"degenerate modulus k^2 = {m.k2}")
    return QuarterPeriods(carlson_rf(0, m.kprime2, 1), carlson_rf(0, m.k2, 1))


def _sncndn_real(x: float, m: float) -> tuple[float, float, float]:
    """sn, cn, dn at real argument for real 0 <= m <= 1."""
    if m == 0:
        return math.sin(x), math.cos(x), 1.0
    if m == 1:
        sech = 1 / math.cosh(x)
        return math.tanh(x), sech, sech
    if abs(x) < 1e-9:
        # leading Maclaurin terms; the AGM path is needlessly lossy here
        x2 = x * x
        return x - (1 + m) * x * x2 / 6, 1 - x2 / 2, 1 - m * x2 / 2
    K = _k_real(m)
    x = math.remainder(x, 4 * K)

    a, b, c = 1.0, math.sqrt(1 - m), math.sqrt(m)
    ratios = []
    while abs(c) > _EPS * a:
        ratios.append(c / a)
        a, b, c = (a + b) / 2, math.sqrt(a * b), (a - b) / 2
    ratios.append(c / a)
    phi = 2 ** (len(ratios) - 1) * a * x
    for r in reversed(ratios[1:]):
        phi = (phi + math.asin(r * math.sin(phi))) / 2
    sn, cn = math.sin(phi), math.cos(phi)
    return sn, cn, math.sqrt(1 - m * sn * sn)


def _nearest_pole_distance(u: complex, K: float, Kp: float) -> float:
    # poles of sn sit at 2nK + (2j + 1) i K'
    if not math.isfinite(Kp):
        return math.inf
    dx = math.remainder(u.real, 2 * K)
    dy = math.remainder(u.imag - Kp, 2 * Kp)
    return math.hypot(dx, dy)


def _sncndn_guaranteed(u: complex, m: float) -> tuple[complex, complex, complex]:
    if u.imag == 0:
        s, c, d = _sncndn_real(u.real, m)
        return complex(s), complex(c), complex(d)
    if m > 0:
        qp = complete_k(m)
        if _nearest_pole_distance(u, qp.K.real, qp.Kprime.real) < POLE_TOL:
            raise PoleProximity(f"sn has a pole near u = {u}")
    s, c, d = _sncndn_real(u.real, m)
    s1, c1, d1 = _sncndn_real(u.imag, 1 - m)
    delta = c1 * c1 + m * s * s * s1 * s1
    if delta == 0:
        raise PoleProximity(f"sn has a pole at u = {u}")
    sn = complex(s * d1, c * d * s1 * c1) / delta
    cn = complex(c * c1, -s * d * s1 * d1) / delta
    dn = complex(d * c1 * d1, -m * s * c * s1) / delta
    return sn, cn, dn


def _taylor_sncndn(m: complex, order: int) -> tuple[list, list, list]:
    # Taylor coefficients from sn' = cn dn, cn' = -sn dn, dn' = -m sn cn
    s, c, d = [0j], [1 + 0j], [1 + 0j]
    for n in range(order):
        cd = sum(c[i] * d[n - i] for i in range(n + 1))
        sd = sum(s[i] * d[n - i] for i in range(n + 1))
        sc = sum(s[i] * c[n - i] for i in range(n + 1))
        s.append(cd / (n + 1))
        c.append(-sd / (n + 1))
        d.append(-m * sc / (n + 1))
    return s, c, d


def _horner(coeffs: list, x: complex) -> complex:
    acc = 0j
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def _sncndn_general(u: complex, m: complex) -> tuple[complex, complex, complex]:
    """Best-effort sn, cn, dn for any modulus by series and doubling."""
    qp = complete_k(m)
    K, Kp = qp.K, qp.Kprime
    # 4K and 4iK' are common periods of sn, cn and dn
    w1, w2 = 4 * K, 4j * Kp
    det = (w1.conjugate() * w2).imag
    a = (u.conjugate() * w2).imag / det
    b = (w1.conjugate() * u).imag / det
    u = u - round(a) * w1 - round(b) * w2

    pole = min(abs(u - (2 * i * K + (2 * j + 1) * 1j * Kp)) for i in (-1, 0, 1) for j in (-2, -1, 0, 1))
    if pole < POLE_TOL:
        raise PoleProximity(f"sn has a pole near u = {u}")

    radius = 0.05 * min(abs(K), abs(Kp))
    halvings = max(0, math.ceil(math.log2(abs(u) / radius))) if abs(u) > radius else 0
    v = u / 2 ** halvings
    sc, cc, dc = _taylor_sncndn(m, 24)
    sn, cn, dn = _horner(sc, v), _horner(cc, v), _horner(dc, v)
    for _ in range(halvings):
        s2, c2, d2 = sn * sn, cn * cn, dn * dn
        den = 1 - m * s2 * s2
        if den == 0:
            raise PoleProximity(f"sn has a pole near u = {u}")
        sn, cn, dn = 2 * sn * cn * dn / den, (c2 - s2 * d2) / den, (d2 - m * s2 * c2) / den
    if not all(cmath.isfinite(t) for t in (sn, cn, dn)):
        raise PoleProximity(f"sn overflowed near u = {u}")
    return sn, cn, dn


def sn_cn_dn(u, m) -> tuple[complex, complex, complex]:
    """Jacobi sn, cn, dn at complex argument ``u``.

    Raises PoleProximity within 1e-12 of a pole of sn.
    """
    u = as_complex(u)
    m = as_modulus(m)
    if not cmath.isfinite(u):
        raise DomainError(f"non-finite argument {u!r}")
    if m.guaranteed:
        return _sncndn_guaranteed(u, m.k2.real)
    return _sncndn_general(u, m.k2)


def inverse_sn(w, m) -> complex:
    """Principal value of sn^{-1}(w): ``w * R_F(1 - w^2, 1 - k^2 w^2, 1)``."""
    w = as_complex(w)
    m = as_modulus(m)
    if w == 0:
        return 0j
    w2 = w * w
    return w * carlson_rf(1 - w2, 1 - m.k2 * w2, 1)


def inverse_sn_of_square(w2, m) -> complex:
    """sn^{-1}(sqrt(w2)) taking the square directly.

    Avoids re-squaring a rounded root, which matters when sqrt(w2) sits on a
    branch point such as 1/k.
    """
    w2 = as_complex(w2)
    m = as_modulus(m)
    if w2 == 0:
        return 0j
    return csqrt(w2) * carlson_rf(1 - w2, 1 - m.k2 * w2, 1)

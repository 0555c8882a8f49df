"""Weierstrass invariants, modulus recovery, p(z), p'(z) and the closed-form zeros.

The sn-based evaluators (`wp`, `wp_prime`) and the Laurent/duplication oracle
(`wp_oracle`) share no code: the oracle touches neither the jacobi module nor
the e-root decomposition, so one can check the other.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import permutations

from .errors import DegenerateLattice, DomainError, NonConvergence, PoleProximity, UnsupportedInvariant
from .jacobi import Modulus, as_modulus, complete_k, inverse_sn_of_square, sn_cn_dn
from .numerics import CubicRoots, as_complex, cfourth_root, csqrt, solve_depressed_cubic

# tolerance for calling a computed k^2 candidate real
_REAL_TOL = 1e-8


@dataclass(frozen=True)
class Invariants:
    """Weierstrass invariants (g2, g3) of 4y^3 - g2 y - g3."""

    g2: complex
    g3: complex

    def __post_init__(self):
        object.__setattr__(self, "g2", as_complex(self.g2))
        object.__setattr__(self, "g3", as_complex(self.g3))

    @property
    def discriminant(self) -> complex:
        return self.g2 ** 3 - 27 * self.g3 ** 2

    @property
    def absolute_invariant(self) -> complex:
        """g2^3 / (27 g3^2); infinite when g3 = 0."""
        if self.g3 == 0:
            return complex(math.inf)
        return self.g2 ** 3 / (27 * self.g3 ** 2)

    @property
    def a(self) -> complex:
        """Coefficient of the xi-cubic, (27/4) g2^3 / (27 g3^2 - g2^3)."""
        delta = self.discriminant
        if delta == 0:
            raise DegenerateLattice("zero discriminant: g2^3 = 27 g3^2")
        if self.g3 == 0:
            return complex(-27 / 4)
        return -6.75 * self.g2 ** 3 / delta

    @property
    def is_real(self) -> bool:
        return self.g2.imag == 0 and self.g3.imag == 0

    @property
    def classification(self) -> str:
        """Root structure of the cubic for real invariants."""
        if not self.is_real:
            return "complex"
        d = self.discriminant.real
        if d > 0:
            return "three_real_distinct"
        if d == 0:
            return "repeated_real"
        return "one_real_two_complex"


@dataclass(frozen=True)
class ModulusRecovery:
    a: complex
    xi_candidates: CubicRoots
    k2_candidates: list
    selected_k2: complex

    @property
    def best_effort(self) -> bool:
        """True when no candidate lies in the guaranteed regime [0, 1)."""
        return not Modulus(self.selected_k2).guaranteed


@dataclass(frozen=True)
class EDecomposition:
    e1: complex
    e2: complex
    e3: complex
    C: complex
    m: Modulus


@dataclass(frozen=True)
class Lattice:
    """Half periods; the period lattice is generated by 2*omega1, 2*omega3."""

    omega1: complex
    omega3: complex

    @property
    def tau(self) -> complex:
        return self.omega3 / self.omega1


@dataclass(frozen=True)
class ZeroPair:
    theta0: complex
    negation: complex

    def scaled(self, lam) -> "ZeroPair":
        """Zeros after the invariants are rescaled by ``lam`` (see `rescale`)."""
        lam = as_complex(lam)
        return ZeroPair(lam * self.theta0, -lam * self.theta0)


def _require_nondegenerate(inv: Invariants) -> None:
    scale = max(abs(inv.g2) ** 3, 27 * abs(inv.g3) ** 2)
    if scale == 0 or abs(inv.discriminant) <= 1e-14 * scale:
        raise DegenerateLattice(f"discriminant vanishes for g2={inv.g2}, g3={inv.g3}")


def invariants_from_modulus(m, C) -> Invariants:
    m = as_modulus(m)
    C = as_complex(C)
    if C == 0:
        raise DomainError("scale C must be non-zero")
    k2 = m.k2
    g2 = 4 / 3 * (k2 * k2 - k2 + 1) * C ** 4
    g3 = 4 / 27 * (k2 + 1) * (k2 - 2) * (2 * k2 - 1) * C ** 6
    return Invariants(g2, g3)


def invariants_from_orbit(alpha: float, beta: float, m) -> Invariants:
    """Invariants of the orbit u'' + u = alpha + 3 beta u^2 at modulus ``m``."""
    m = as_modulus(m)
    s = 1 - 12 * alpha * beta
    if not s > 0:
        raise DomainError(f"need 1 - 12 alpha beta > 0, got {s!r}")
    k2 = m.k2
    ratio = s / (k2 * k2 - k2 + 1)
    g2 = 1 / 12 - alpha * beta
    g3 = (k2 + 1) * (k2 - 2) * (2 * k2 - 1) / 432 * ratio * csqrt(ratio)
    return Invariants(g2, g3)


def absolute_invariant_from_k2(k2) -> complex:
    """(k^4 - k^2 + 1)^3 / ((k^2 + 1)^2 (k^2 - 2)^2 (k^2 - 1/2)^2)."""
    k2 = as_complex(k2)
    den = ((k2 + 1) * (k2 - 2) * (k2 - 0.5)) ** 2
    if den == 0:
        raise DomainError(f"absolute invariant is infinite at k^2 = {k2}")
    return (k2 * k2 - k2 + 1) ** 3 / den


def _k2_pair(xi: complex) -> tuple[complex, complex]:
    # roots of k^4 - (xi + 1) k^2 + 1, returned as (minus sign, plus sign);
    # their product is 1, which gives the small one without cancellation
    r = csqrt(xi * xi + 2 * xi - 3)
    minus, plus = (xi + 1 - r) / 2, (xi + 1 + r) / 2
    if abs(plus) >= abs(minus) and plus != 0:
        minus = 1 / plus
    elif minus != 0:
        plus = 1 / minus
    return minus, plus


def _is_unit_interval(k2: complex) -> bool:
    tol = _REAL_TOL * max(1.0, abs(k2))
    return abs(k2.imag) <= tol and -tol <= k2.real <= 1 + tol


def _e_roots(inv: Invariants) -> tuple[complex, complex, complex]:
    if inv.g3 == 0:
        # exact symmetry keeps k^2 = 1/2 exact; the zero is double here and
        # would otherwise inherit sqrt(eps) error through sn^{-1}
        h = csqrt(inv.g2) / 2
        return h, 0j, -h
    roots = tuple(solve_depressed_cubic(-inv.g2 / 4, -inv.g3 / 4))
    if inv.is_real and inv.discriminant.real > 0:
        roots = tuple(complex(e.real, 0.0) for e in roots)
    return roots


def _cross_ratio(perm) -> complex:
    e1, e2, e3 = perm
    return (e2 - e3) / (e1 - e3)


def recover_modulus(inv: Invariants) -> ModulusRecovery:
    """All k^2 compatible with the absolute invariant, plus the preferred one.

    Candidates are listed cubic-root-major with the minus sign first, so the
    first real candidate in [0, 1] is the rho = 1, minus-sign choice whenever
    that one qualifies.  Without any such candidate the one with the smallest
    imaginary part wins, ties going to the smaller modulus.

    The six candidates are the cross ratios (e2 - e3)/(e1 - e3) over the
    orderings of the e-roots.  Near g3 = 0 the xi-cubic has a double root and
    loses half the digits, so the chosen value is replaced by the nearest
    cross ratio.
    """
    _require_nondegenerate(inv)
    a = inv.a
    xis = solve_depressed_cubic(a, -a)
    cands = [k2 for xi in xis for k2 in _k2_pair(xi)]

    real = [c for c in cands if _is_unit_interval(c)]
    if real:
        chosen = real[0]
    else:
        chosen = min(cands, key=lambda c: (round(abs(c.imag), 12), abs(c)))

    polished = min((_cross_ratio(p) for p in permutations(_e_roots(inv))), key=lambda c: abs(c - chosen))
    if abs(polished - chosen) <= 1e-6 * max(1.0, abs(chosen)):
        chosen = polished
    if real:
        chosen = complex(min(1.0, max(0.0, chosen.real)), 0.0)
    return ModulusRecovery(a, xis, cands, chosen)


def decompose(inv: Invariants, rec: ModulusRecovery | None = None) -> EDecomposition:
    """Roots e1, e2, e3 of 4y^3 - g2 y - g3 ordered to match the selected k^2.

    The ordering makes k^2 = (e2 - e3) / (e1 - e3); then C = sqrt(e1 - e3).
    """
    _require_nondegenerate(inv)
    if rec is None:
        rec = recover_modulus(inv)
    k2 = rec.selected_k2
    e1, e2, e3 = min(permutations(_e_roots(inv)), key=lambda p: abs(_cross_ratio(p) - k2))
    return EDecomposition(e1, e2, e3, csqrt(e1 - e3), Modulus(k2))


def lattice(dec: EDecomposition) -> Lattice:
    """Half periods K/C and iK'/C, oriented so Im(omega3/omega1) > 0."""
    k2 = dec.m.k2
    if k2 in (0, 1):
        raise DegenerateLattice(f"no lattice at k^2 = {k2.real}")
    qp = complete_k(dec.m)
    w1, w3 = qp.K / dec.C, 1j * qp.Kprime / dec.C
    if (w3 / w1).imag < 0:
        w3 = -w3
    return Lattice(w1, w3)


def reduce_to_fundamental(z, lat: Lattice) -> complex:
    """Translate ``z`` into the period cell centred at 0.

    Coordinates in the basis (2 omega1, 2 omega3) end up in [-1/2, 1/2).
    """
    z = as_complex(z)
    w1, w3 = 2 * lat.omega1, 2 * lat.omega3
    det = (w1.conjugate() * w3).imag
    s = (z.conjugate() * w3).imag / det
    t = (w1.conjugate() * z).imag / det
    return z - math.floor(s + 0.5) * w1 - math.floor(t + 0.5) * w3


def wp(z, dec: EDecomposition) -> complex:
    """p(z) = C^2 / sn^2(Cz) - (1 + k^2) C^2 / 3."""
    C = dec.C
    sn, _, _ = sn_cn_dn(C * as_complex(z), dec.m)
    if abs(sn) < 1e-10 * abs(C):
        raise PoleProximity(f"z = {z} is within 1e-10 of a lattice point")
    return C * C / (sn * sn) - (1 + dec.m.k2) * C * C / 3


def wp_prime(z, dec: EDecomposition) -> complex:
    """p'(z) = -2 C^3 cn(Cz) dn(Cz) / sn^3(Cz)."""
    C = dec.C
    sn, cn, dn = sn_cn_dn(C * as_complex(z), dec.m)
    if abs(sn) < 1e-10 * abs(C):
        raise PoleProximity(f"z = {z} is within 1e-10 of a lattice point")
    return -2 * C ** 3 * cn * dn / sn ** 3


def wp_zeros(inv: Invariants) -> ZeroPair:
    """Zeros +-theta0 of p from the closed form

        theta0 = (4 (k^4 - k^2 + 1) / (3 g2))^(1/4) * sn^{-1}(sqrt(3 / (1 + k^2)), k)

    The fourth root takes the branch equal to +-1/C for the chosen ordering
    of the e-roots; the principal branch is off by a factor i whenever that
    ordering has e1 - e3 < 0, e.g. for g3 < 0.
    """
    if inv.g2 == 0:
        raise UnsupportedInvariant("g2 = 0 (equianharmonic case) is not covered by the zero formula")
    rec = recover_modulus(inv)
    dec = decompose(inv, rec)
    k2 = rec.selected_k2

    pref = cfourth_root(4 * (k2 * k2 - k2 + 1) / (3 * inv.g2))
    pref = min((pref * 1j ** j for j in range(4)), key=lambda p: abs((p * dec.C) ** 2 - 1))
    theta = pref * inverse_sn_of_square(3 / (1 + k2), dec.m)
    return _canonical(theta, lattice(dec))


def _canonical(theta: complex, lat: Lattice) -> ZeroPair:
    t = reduce_to_fundamental(theta, lat)
    tol = 1e-12 * max(1.0, abs(t))
    if t.real < -tol or (abs(t.real) <= tol and t.imag < 0):
        t = -t
    return ZeroPair(t, -t)


def rescale(inv: Invariants, lam) -> Invariants:
    """Invariants (g2 / lam^4, g3 / lam^6); their zeros are lam times the old ones."""
    lam = as_complex(lam)
    if lam == 0:
        raise DomainError("lambda must be non-zero")
    return Invariants(inv.g2 / lam ** 4, inv.g3 / lam ** 6)


# ---------------------------------------------------------------- oracle

_LAURENT_TERMS = 40


def laurent_coefficients(g2, g3, n_terms: int = _LAURENT_TERMS) -> list:
    """c_2..c_n of p(z) = z^-2 + sum c_n z^(2n-2); index i holds c_i."""
    c = [0j] * (n_terms + 1)
    c[2] = as_complex(g2) / 20
    if n_terms >= 3:
        c[3] = as_complex(g3) / 28
    for n in range(4, n_terms + 1):
        acc = sum(c[m] * c[n - m] for m in range(2, n - 1))
        c[n] = 3 * acc / ((2 * n + 1) * (n - 3))
    return c


def _series_radius(c: list) -> float:
    # |c_n|^(-1/(2n)) underestimates the distance to the nearest lattice
    # point; min over the upper half of the coefficients skips cancellations
    n_terms = len(c) - 1
    ests = [abs(c[n]) ** (-1 / (2 * n)) for n in range(n_terms // 2, n_terms + 1) if abs(c[n]) > 0]
    return min(ests) if ests else math.inf


def wp_oracle(z, inv: Invariants, with_derivative: bool = False):
    """Independent p(z) from the Laurent series and the duplication formula.

    Works on invariants scaled to unit size, evaluates the series inside a
    quarter of its convergence radius and doubles back out.  Intended only
    for verification; accuracy is about 1e-9 near the fundamental cell.
    """
    z = as_complex(z)
    if abs(z) < 1e-10:
        raise PoleProximity("the oracle cannot evaluate at a lattice point")
    g2, g3 = inv.g2, inv.g3
    s = max(abs(g2) ** 0.25, abs(g3) ** (1 / 6), 1e-300)
    g2s, g3s = g2 / s ** 4, g3 / s ** 6
    zs = z * s

    c = laurent_coefficients(g2s, g3s)
    r = min(0.25 * _series_radius(c), 1.0)
    doublings = max(0, math.ceil(math.log2(abs(zs) / r))) if abs(zs) > r else 0
    v = zs / 2 ** doublings

    tail = abs(c[-1]) * abs(v) ** (2 * len(c) - 2)
    if tail > 1e-12:
        raise NonConvergence(f"Laurent tail bound {tail:.3g} exceeds 1e-12")

    v2 = v * v
    p = 1 / v2 + sum(c[n] * v2 ** (n - 1) for n in range(2, len(c)))
    dp = -2 / (v2 * v) + sum((2 * n - 2) * c[n] * v ** (2 * n - 3) for n in range(2, len(c)))
    for _ in range(doublings):
        if dp == 0:
            raise PoleProximity(f"z = {z} is a lattice point")
        slope = (6 * p * p - g2s / 2) / dp
        p2 = slope * slope / 4 - 2 * p
        dp = -slope * (p2 - p) - dp
        p = p2
        if not (cmath.isfinite(p) and cmath.isfinite(dp)):
            raise PoleProximity(f"z = {z} is too close to a lattice point")
    p, dp = p * s * s, dp * s ** 3
    return (p, dp) if with_derivative else p

"""Scalar kernel: principal-branch radicals, a Cardano cubic solver,
Carlson's R_F and the arithmetic-geometric mean.

Everything works on Python's builtin ``complex``; real inputs are promoted.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, NonConvergence

RHO = cmath.exp(2j * math.pi / 3)

# (3 * eps)^(-1/8) scales the stopping radius of the R_F duplication so that
# the truncated 7th-order series is accurate to roughly machine precision.
_RF_SCALE = (3.0 * 2.220446049250313e-16) ** (-1.0 / 8.0)
_RF_MAX_STEPS = 100


def as_complex(x) -> complex:
    """Promote to complex and drop the sign of a zero imaginary part."""
    z = complex(x)
    return complex(z.real, z.imag + 0.0)


def csqrt(z) -> complex:
    """Principal square root, argument in (-pi/2, pi/2]."""
    return cmath.sqrt(as_complex(z))


def ccbrt(z) -> complex:
    """Principal cube root, argument in (-pi/3, pi/3]."""
    z = as_complex(z)
    if z == 0:
        return 0j
    r, phi = cmath.polar(z)
    return cmath.rect(r ** (1.0 / 3.0), phi / 3.0)


def cfourth_root(z) -> complex:
    """Principal fourth root, argument in (-pi/4, pi/4]."""
    return csqrt(csqrt(z))


@dataclass(frozen=True)
class CubicRoots:
    """Roots of t^3 + p t + q = 0, r1 being the rho = 1 Cardano branch."""

    r1: complex
    r2: complex
    r3: complex

    def __iter__(self) -> Iterator[complex]:
        return iter((self.r1, self.r2, self.r3))

    def __getitem__(self, i: int) -> complex:
        return (self.r1, self.r2, self.r3)[i]


def _polish(t: complex, p: complex, q: complex) -> complex:
    # one guarded Newton step; never accepted if it makes things worse
    f = (t * t + p) * t + q
    df = 3 * t * t + p
    if df == 0:
        return t
    t_new = t - f / df
    f_new = (t_new * t_new + p) * t_new + q
    return t_new if abs(f_new) < abs(f) else t


def _trig_roots(p: complex, q: complex) -> tuple[complex, complex, complex]:
    # t = 2 s cos(theta) with s^2 = -p/3 turns the cubic into cos(3 theta) = -q / (2 s^3)
    s = csqrt(-p / 3)
    c = -q / (2 * s ** 3)
    if abs(c.imag) <= 1e-15 * max(1.0, abs(c)):
        c = complex(min(1.0, max(-1.0, c.real)), 0.0)
    theta = cmath.acos(c) / 3
    return tuple(2 * s * cmath.cos(theta - 2 * math.pi * j / 3) for j in range(3))


def solve_depressed_cubic(p, q) -> CubicRoots:
    """All three roots of ``t**3 + p*t + q = 0`` in Cardano form.

    The roots are ``rho**j * u + rho**(2*j) * v`` for ``j = 0, 1, 2`` with
    ``u`` the principal cube root of ``-q/2 + sqrt((p/3)**3 + (q/2)**2)`` and
    ``v = -p / (3u)``.  Close to a repeated root the trigonometric form is
    used instead, keeping the largest-cosine root first.
    """
    p, q = as_complex(p), as_complex(q)
    if not all(math.isfinite(c) for c in (p.real, p.imag, q.real, q.imag)):
        raise DomainError(f"non-finite cubic coefficients p={p!r}, q={q!r}")
    if p == 0 and q == 0:
        return CubicRoots(0j, 0j, 0j)

    disc = (p / 3) ** 3 + (q / 2) ** 2
    scale = max(abs(q / 2) ** 2, abs(p / 3) ** 3)
    if p != 0 and abs(disc) < 1e-14 * scale:
        roots = _trig_roots(p, q)
    else:
        s = csqrt(disc)
        w_plus, w_minus = -q / 2 + s, -q / 2 - s
        # for conjugate radicands either choice gives the same root set;
        # otherwise take the larger one to avoid cancellation
        w = w_plus if abs(w_plus) >= abs(w_minus) else w_minus
        u = ccbrt(w)
        v = -p / (3 * u) if u != 0 else 0j
        roots = tuple(RHO ** j * u + RHO ** (2 * j) * v for j in range(3))
    return CubicRoots(*(_polish(t, p, q) for t in roots))


def carlson_rf(x, y, z) -> complex:
    """Carlson's symmetric integral R_F(x, y, z) by duplication.

    Arguments may be complex; a negative real argument is taken as the limit
    from the upper half plane, matching the principal square root.  At most
    one argument may vanish.
    """
    x, y, z = as_complex(x), as_complex(y), as_complex(z)
    if sum(1 for t in (x, y, z) if t == 0) > 1:
        raise DomainError("R_F needs at most one zero argument")

    a0 = (x + y + z) / 3
    q = _RF_SCALE * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a = a0
    for _ in range(_RF_MAX_STEPS):
        if q < abs(a):
            break
        sx, sy, sz = csqrt(x), csqrt(y), csqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4
        a = (a + lam) / 4
        q /= 4
    else:
        raise NonConvergence("R_F duplication did not contract in 100 steps")

    dx = 1 - x / a
    dy = 1 - y / a
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    series = (
        1
        - e2 / 10
        + e3 / 14
        + e2 * e2 / 24
        - 3 * e2 * e3 / 44
        - 5 * e2 ** 3 / 208
        + 3 * e3 * e3 / 104
        + e2 * e2 * e3 / 16
    )
    return series / csqrt(a)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0 and b > 0):
        raise DomainError(f"agm needs positive arguments, got ({a!r}, {b!r})")
    a, b = float(a), float(b)
    for _ in range(64):
        if abs(a - b) <= 2e-16 * a:
            break
        a, b = (a + b) / 2, math.sqrt(a * b)
    return (a + b) / 2

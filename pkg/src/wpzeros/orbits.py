"""Closed-form relativistic orbits r = 1 / (A + B sn^2(C theta, k)).

The orbit equation u'' + u = alpha + 3 beta u^2 for u = 1/r is solved exactly
by u = A + B sn^2(C theta) with the constants from `orbit_constants`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnboundOrbit
from .jacobi import Modulus, as_modulus, inverse_sn, sn_cn_dn


@dataclass(frozen=True)
class OrbitParams:
    alpha: float
    beta: float
    m: Modulus

    def __post_init__(self):
        object.__setattr__(self, "m", as_modulus(self.m))
        if self.beta == 0:
            raise DomainError("beta must be non-zero")
        if not 1 - 12 * self.alpha * self.beta > 0:
            raise DomainError(f"need 1 - 12 alpha beta > 0, got alpha={self.alpha}, beta={self.beta}")
        if not self.m.guaranteed:
            raise DomainError(f"orbits need a real k^2 in [0, 1), got {self.m.k2}")


@dataclass(frozen=True)
class OrbitConstants:
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class TrajectorySample:
    theta: float
    r: float
    x: float
    y: float
    bound: bool = True


def orbit_constants(p: OrbitParams) -> OrbitConstants:
    k2 = p.m.k2.real
    root = math.sqrt((1 - 12 * p.alpha * p.beta) / (k2 * k2 - k2 + 1))
    A = (1 - root * (k2 + 1)) / (6 * p.beta)
    B = k2 * root / (2 * p.beta)
    C = math.sqrt(root) / 2
    return OrbitConstants(A, B, C)


def _sn2(x: float, m) -> float:
    sn = sn_cn_dn(x, m)[0].real
    return sn * sn


def inverse_radius(theta: float, oc: OrbitConstants, m) -> float:
    """u = 1/r = A + B sn^2(C theta); may be non-positive."""
    return oc.A + oc.B * _sn2(oc.C * theta, m)


def radius(theta: float, oc: OrbitConstants, m) -> float:
    u = inverse_radius(theta, oc, m)
    if not u > 0:
        raise UnboundOrbit(f"A + B sn^2 = {u!r} <= 0 at theta = {theta}")
    return 1 / u


def angle_from_radius(r: float, oc: OrbitConstants, m) -> float:
    """Principal angle in [0, K/C] at which the orbit reaches radius ``r``."""
    if oc.B == 0:
        raise DomainError("B = 0: the radius does not depend on the angle")
    s = (1 / r - oc.A) / oc.B
    if -1e-14 <= s < 0:
        s = 0.0
    elif 1 < s <= 1 + 1e-14:
        s = 1.0
    if not 0 <= s <= 1:
        raise DomainError(f"radius {r} is not reached on the principal arc")
    return inverse_sn(math.sqrt(s), m).real / oc.C


def sample_trajectory(oc: OrbitConstants, m, theta_max: float, n: int) -> list[TrajectorySample]:
    """``n`` equally spaced samples on [0, theta_max].

    Where A + B sn^2 <= 0 the sample is kept with ``bound=False``, r = inf and
    x = y = nan.
    """
    if n < 2:
        raise DomainError("need at least two samples")
    if not theta_max > 0:
        raise DomainError("theta_max must be positive")
    m = as_modulus(m)
    out = []
    for i in range(n):
        theta = theta_max * i / (n - 1)
        u = inverse_radius(theta, oc, m)
        if u > 0:
            r = 1 / u
            out.append(TrajectorySample(theta, r, r * math.cos(theta), r * math.sin(theta)))
        else:
            out.append(TrajectorySample(theta, math.inf, math.nan, math.nan, bound=False))
    return out


def ode_residual(oc: OrbitConstants, p: OrbitParams, theta: float, h: float = 1e-4) -> float:
    """|u'' + u - alpha - 3 beta u^2| with u'' by central differences of step h."""
    if not 1e-6 <= h <= 1e-2:
        raise DomainError(f"step h={h} outside [1e-6, 1e-2]")
    um = inverse_radius(theta - h, oc, p.m)
    u0 = inverse_radius(theta, oc, p.m)
    up = inverse_radius(theta + h, oc, p.m)
    upp = (up - 2 * u0 + um) / (h * h)
    return abs(upp + u0 - p.alpha - 3 * p.beta * u0 * u0)

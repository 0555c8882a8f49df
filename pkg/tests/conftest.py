import math

import mpmath
import pytest


def lattice_distance(z, target, omega1, omega3, signed=True):
    """Smallest |s*z - target - 2m omega1 - 2n omega3| over integers m, n and
    s = +-1 (s = 1 only when ``signed`` is False)."""
    w1, w3 = 2 * omega1, 2 * omega3
    det = (w1.conjugate() * w3).imag
    best = math.inf
    for sign in (1, -1) if signed else (1,):
        d = sign * z - target
        s = (d.conjugate() * w3).imag / det
        t = (w1.conjugate() * d).imag / det
        m0, n0 = round(s), round(t)
        for m in (m0 - 1, m0, m0 + 1):
            for n in (n0 - 1, n0, n0 + 1):
                best = min(best, abs(d - m * w1 - n * w3))
    return best


def mp_half_periods(k2, C):
    """Half periods K/C, iK'/C from mpmath's complete integral; independent of the package."""
    K = complex(mpmath.ellipk(k2))
    Kp = complex(mpmath.ellipk(1 - k2))
    return K / C, 1j * Kp / C


@pytest.fixture
def rng():
    import random

    return random.Random(20261016)


def real_corpus(n, seed):
    """Random real (g2, g3) with positive discriminant, g2 in [0.5, 20], |g3| <= 10."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < n:
        g2, g3 = rng.uniform(0.5, 20), rng.uniform(-10, 10)
        if g2 ** 3 - 27 * g3 ** 2 > 0:
            out.append((g2, g3))
    return out

"""Homogeneity: p(lam z | g2/lam^4, g3/lam^6) = p(z | g2, g3) / lam^2.

So zeros scale linearly with lam.  Rescaling (15, 7 sqrt 2) by 2^(1/12) gives
(15/2^(1/3), 7), whose zero is 2^(1/12) times the original one.
"""
import math

from wpzeros import Invariants, decompose, lattice, reduce_to_fundamental, rescale, wp_zeros

base = Invariants(15, 7 * math.sqrt(2))
lam = 2 ** (1 / 12)
scaled = rescale(base, lam)
print("rescaled invariants:", scaled.g2.real, scaled.g3.real)

direct = wp_zeros(scaled).theta0
predicted = wp_zeros(base).scaled(lam).theta0
lat = lattice(decompose(scaled))
print("direct   :", direct)
print("predicted:", predicted)
print("difference mod periods:", abs(reduce_to_fundamental(direct - predicted, lat)))

"""The lemniscatic case g2 = 4, g3 = 0.

Here k^2 = 1/2 and C = sqrt(2), and the zero has a closed form in the gamma
function: Gamma(1/4)^2 / (4 sqrt(2 pi)) * (1 - i), up to sign and periods.
"""
import math

from wpzeros import Invariants, decompose, lattice, recover_modulus, wp_oracle, wp_zeros

inv = Invariants(4, 0)
rec = recover_modulus(inv)
print("xi roots      :", [f"{x:.6g}" for x in rec.xi_candidates])
print("k^2 candidates:", sorted({round(c.real, 12) for c in rec.k2_candidates}))
print("selected k^2  :", rec.selected_k2.real)

dec = decompose(inv)
lat = lattice(dec)
print("e-roots       :", dec.e1.real, dec.e2.real, dec.e3.real)
print("half periods  :", lat.omega1, lat.omega3)

zp = wp_zeros(inv)
gamma_form = math.gamma(0.25) ** 2 / (4 * math.sqrt(2 * math.pi))
print("theta0        :", zp.theta0)
print("gamma form    :", gamma_form)
print("|p(theta0)|   :", abs(wp_oracle(zp.theta0, inv)))

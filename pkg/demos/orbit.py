"""A closed-form orbit r = 1/(A + B sn^2(C theta, k)) and a finite-difference
check that u = 1/r solves u'' + u = alpha + 3 beta u^2."""
import math

from wpzeros import OrbitParams, complete_k, ode_residual, orbit_constants, sample_trajectory

p = OrbitParams(alpha=0.07, beta=1.0, m=0.4)
oc = orbit_constants(p)
print(f"A = {oc.A:.12f}  B = {oc.B:.12f}  C = {oc.C:.12f}")

apsis = complete_k(p.m).K.real / oc.C
# B > 0, so u is smallest at theta = 0: the orbit starts at its far apsis
print(f"apsidal angle K/C = {apsis:.6f} rad ({math.degrees(apsis):.2f} deg)")
print(f"far apsis r = {1 / oc.A:.6f}, near apsis r = {1 / (oc.A + oc.B):.6f}")

samples = sample_trajectory(oc, p.m, 2 * apsis, 9)
for s in samples:
    print(f"  theta={s.theta:8.4f}  r={s.r:10.6f}  x={s.x:10.6f}  y={s.y:10.6f}")

worst = max(ode_residual(oc, p, 0.1 * i) for i in range(100))
print(f"max ODE residual over 100 angles: {worst:.2e}")

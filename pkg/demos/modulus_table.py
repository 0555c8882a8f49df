"""Recover k from (g2, g3) for three real lattices and compare with their
known closed forms, together with the absolute invariant J."""
import cmath
import math

from wpzeros import Invariants, recover_modulus

rows = [
    ((7, 3), "1/sqrt(5)", 1 / math.sqrt(5), "7^3/3^5", 7 ** 3 / 3 ** 5),
    ((11, 7), "(sqrt2-1)/(sqrt2+1)", (math.sqrt(2) - 1) / (math.sqrt(2) + 1), "11^3/(3^3 7^2)", 11 ** 3 / (27 * 49)),
    ((15, 7 * math.sqrt(2)), "sqrt2-1", math.sqrt(2) - 1, "5^3/(2 7^2)", 125 / 98),
]

print(f"{'g2':>4} {'g3':>9}  {'a':>12} {'xi':>10}  {'k':>18}  {'closed form':<20} {'J':>10}")
for (g2, g3), k_label, k_exact, j_label, j_exact in rows:
    inv = Invariants(g2, g3)
    rec = recover_modulus(inv)
    k = cmath.sqrt(rec.selected_k2).real
    xi = rec.selected_k2 + 1 / rec.selected_k2 - 1
    print(f"{g2:>4} {g3:>9.5f}  {rec.a.real:>12.6f} {xi.real:>10.6f}  {k:.15f}  {k_label:<20} {inv.absolute_invariant.real:.8f}")
    assert abs(k - k_exact) < 1e-12 and abs(inv.absolute_invariant - j_exact) < 1e-12 * j_exact
print("all rows agree with their closed forms")

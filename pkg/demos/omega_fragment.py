"""The symbolic fragment on the naturals plus a point at infinity.

Run with ``python3 demos/omega_fragment.py``.
"""
from fintop.omega import C_OMEGA, COF, STAR, FinCofSet, excof_witness, is_continuous_sym, is_open

fin, cof = FinCofSet.finite, FinCofSet.cofinite

A, B = fin([1, 2, 3]), cof([2, 5])
print("A =", A, " B =", B)
print("A | B =", A | B, " A & B =", A & B, " ~B =", ~B)

print("\nopen sets of the one-point compactification")
for U, star in [(fin([4, 7]), False), (cof([0]), True), (fin([4]), True)]:
    print(f"  {U} with star={star}: open={is_open(C_OMEGA, U, star)}")

# a finite set F can be folded onto one point by a continuous self-map
F, u, b = {3, 4, 8}, 10, 0
w = excof_witness(F, u, b)
print(f"\nfolding F={sorted(F)} onto {u}, fixing {b}")
print("  images:", {x: w.f(x) for x in range(12)}, " star ->", w.f(STAR))
print("  all checks pass:", w.ok)
print("  continuous on the cofinite space:", is_continuous_sym(w.f, COF, COF))

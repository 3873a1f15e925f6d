"""Hull membership, saturated closures and the T0-reflection on small spaces.

Run with ``python3 demos/hulls_and_closures.py``.
"""
from fintop.classes import T0, heredity_report, in_hull, saturate, t0_reflection, universe
from fintop.core import check_property, classify_map, discrete, indiscrete, make_space
from fintop.prime import gen

S = gen("S")
I2 = indiscrete(2)

print("Which hulls of a family contain a space?")
for kind in ("coreflective", "epireflective", "bireflective"):
    for X, D, label in [(I2, [S], "I(2) vs {S}"), (S, [discrete(2)], "S vs {D(2)}")]:
        r = in_hull(kind, X, D)
        print(f"  {kind:13} {label:12} {r.member}")

# the Sierpinski space generates every finite space by sums and quotients
spaces = universe(4, cumulative=True)
hits = sum(in_hull("coreflective", X, [S]).member for X in spaces)
print(f"\ncoreflective hull of S contains {hits} of {len(spaces)} spaces up to 4 points")
t0 = sum(check_property(X, "T0") for X in spaces)
epi = sum(in_hull("epireflective", X, [S]).member for X in spaces)
print(f"epireflective hull of S: {epi} members, T0 spaces: {t0}")

print("\nsaturating {S} inside T0 spaces up to 4 points")
F = saturate([S], point_bound=4, pred=T0)
print(f"  {len(F.members)} members")
h = heredity_report(F)
print(f"  closed under prime factors: {h.pf_closed}, hereditary: {h.hereditary}")

print("\nT0-reflection of the 3-point space with an indiscrete pair")
X = make_space(3, [[], [0, 1], [0, 1, 2]])
r = t0_reflection(X)
flags = classify_map(r.arrow)
print(f"  reflection has {r.rx.n} points; arrow {r.arrow.assignment}")
print(f"  quotient={flags.quotient} initial={flags.initial} retraction={flags.retraction}")

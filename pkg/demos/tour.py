"""A short walk through the library: spaces, maps, prime factors and pinches.

Run with ``python3 demos/tour.py``.
"""
from fintop.constructions import dtriangle, pinched_subspace, triangle
from fintop.core import are_homeomorphic, check_property, classify_map, finer_than, make_space
from fintop.prime import gen, is_prime, prime_decomposition, prime_factor


def show(label, X):
    opens = [sorted(i for i in range(X.n) if U >> i & 1) for U in X.opens]
    print(f"{label}: {X.n} points, opens {opens}")


S = gen("S")
show("Sierpinski space", S)

# a three-point chain, written out by hand
X = make_space(3, [[], [2], [1, 2], [0, 1, 2]])
show("chain", X)
print("  T0:", check_property(X, "T0"), " connected:", check_property(X, "connected"))

# every point has a prime factor; gluing them back gives the space again
print("\nprime factors of the chain")
for a in range(X.n):
    F = prime_factor(X, a)
    kind = "prime" if is_prime(F) else "discrete"
    show(f"  at {a} ({kind})", F)
d = prime_decomposition(X)
print(f"  sum of factors has {d.sum.n} points; collapse map is a quotient:",
      classify_map(d.map).quotient)

# the two pinch topologies on a product carrier
print("\npinching S onto S at the closed point 0")
glued, initial = triangle(S, S, 0).base, dtriangle(S, S, 0).base
show("  glued (final)", glued)
show("  initial", initial)
print("  glued finer than initial:", finer_than(glued, initial))
p = pinched_subspace(S, S, 0, 0)
print("  pinched subspace collapses onto the factor by a quotient:", classify_map(p.q).quotient)

print("\nC(1) is Sierpinski up to relabelling:", are_homeomorphic(gen("C", 1), S))

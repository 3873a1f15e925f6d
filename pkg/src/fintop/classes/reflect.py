"""T0-reflection, membership relative to an ambient predicate, and rigidity."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from fintop.classes.hull import in_hull
from fintop.classes.universe import UniversePredicate, predicate
from fintop.core.maps import SpaceMap, classify_map, continuous_maps, is_continuous
from fintop.core.space import FinSpace, bits, quotient_by_map
from fintop.errors import MemberOutsideA, PreconditionFailed
from fintop.prime import prime_factor


@dataclass(frozen=True)
class T0Reflection:
    rx: FinSpace
    arrow: SpaceMap


def t0_reflection(X: FinSpace) -> T0Reflection:
    """Identify points with equal closures; classes are numbered by least member."""
    label: dict[int, int] = {}
    fn = []
    for x in range(X.n):
        cl = X.down[x]
        if cl not in label:
            label[cl] = len(label)
        fn.append(label[cl])
    rx, arrow = quotient_by_map(X, fn, len(label))
    return T0Reflection(rx, arrow)


def in_ad_hull(
    X: FinSpace,
    D: Sequence[FinSpace],
    A: str | UniversePredicate,
    check_members: bool = True,
) -> bool:
    """``X`` satisfies ``A`` and lies in the coreflective hull of ``D``.

    With ``check_members`` every member of ``D`` must itself satisfy ``A``.
    """
    A = predicate(A)
    if check_members:
        bad = [i for i, M in enumerate(D) if not A(M)]
        if bad:
            raise MemberOutsideA(f"family members {bad} do not satisfy {A.name}")
    return A(X) and in_hull("coreflective", X, D).member


def verify_initial_singleton_fiber(f: SpaceMap, b: int) -> bool:
    """Check that the prime factor at the lone preimage of ``b`` lies in the hull of ``Y_b``.

    Every section ``g`` of ``f`` is checked to be continuous from ``Y_b`` to
    ``X_a``; ``f`` itself is then a retraction ``X_a -> Y_b``.
    """
    flags = classify_map(f)
    if not (flags.initial and flags.surjective):
        raise PreconditionFailed("the map must be initial and surjective")
    fibre = f.preimage(1 << b)
    if fibre.bit_count() != 1:
        raise PreconditionFailed(f"the fibre over {b} must be a single point")
    a = fibre.bit_length() - 1
    Xa = prime_factor(f.dom, a)
    Yb = prime_factor(f.cod, b)
    fibres = [list(bits(f.preimage(1 << y))) for y in range(f.cod.n)]
    f_ab = SpaceMap(Xa, Yb, f.assignment)
    if not is_continuous(f_ab):
        return False
    for choice in iproduct(*fibres):
        g = SpaceMap(Yb, Xa, tuple(choice))
        if not is_continuous(g):
            return False
        if g.then(f_ab).assignment != tuple(range(f.cod.n)):
            return False
    return in_hull("coreflective", Xa, [Yb]).member


def strongly_rigid(X: FinSpace) -> bool:
    """Every continuous self-map is constant or the identity."""
    ident = tuple(range(X.n))
    for f in continuous_maps(X, X):
        if f != ident and len(set(f)) > 1:
            return False
    return True


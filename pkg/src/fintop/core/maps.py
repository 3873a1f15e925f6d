"""Point maps between finite spaces, their classification, and map search.

A map between finite spaces is continuous iff it is monotone for the
specialization preorders, so all searches below are backtracking searches
over monotone assignments.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from fintop.core.space import FinSpace, bits, final_topology, initial_topology


@dataclass(frozen=True)
class SpaceMap:
    dom: FinSpace
    cod: FinSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.dom.n:
            raise ValueError("assignment must be total on the domain")
        if any(not 0 <= v < self.cod.n for v in self.assignment):
            raise ValueError("assignment leaves the codomain")

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def preimage(self, mask: int) -> int:
        out = 0
        for x, v in enumerate(self.assignment):
            if mask >> v & 1:
                out |= 1 << x
        return out

    def image(self, mask: int | None = None) -> int:
        out = 0
        for x, v in enumerate(self.assignment):
            if mask is None or mask >> x & 1:
                out |= 1 << v
        return out

    def then(self, other: "SpaceMap") -> "SpaceMap":
        """Composite ``other o self``."""
        return SpaceMap(self.dom, other.cod, tuple(other.assignment[v] for v in self.assignment))

    @classmethod
    def identity(cls, X: FinSpace) -> "SpaceMap":
        return cls(X, X, tuple(range(X.n)))


@dataclass(frozen=True)
class MapFlags:
    continuous: bool
    quotient: bool
    initial: bool
    embedding: bool
    retraction: bool
    surjective: bool
    injective: bool


def is_continuous(f: SpaceMap) -> bool:
    a = f.assignment
    cod = f.cod.nbhd
    for x in range(f.dom.n):
        target = cod[a[x]]
        for y in bits(f.dom.nbhd[x]):
            if not target >> a[y] & 1:
                return False
    return True


def is_initial(f: SpaceMap) -> bool:
    return initial_topology(f.dom.n, [(f.assignment, f.cod)]) == f.dom


def is_quotient(f: SpaceMap) -> bool:
    """Surjective, continuous, and the codomain carries the final topology."""
    if set(f.assignment) != set(range(f.cod.n)) or not is_continuous(f):
        return False
    return final_topology(f.cod.n, [(f.dom, f.assignment)]) == f.cod


def find_section(f: SpaceMap) -> SpaceMap | None:
    """A continuous ``s: cod -> dom`` with ``f o s = id``, or None.

    All candidate sections are searched; no heuristic cut-offs.
    """
    fibres = [0] * f.cod.n
    for x, v in enumerate(f.assignment):
        fibres[v] |= 1 << x
    if any(m == 0 for m in fibres):
        return None
    allowed = {c: fibres[c] for c in range(f.cod.n)}
    for s in continuous_maps(f.cod, f.dom, allowed=allowed):
        return SpaceMap(f.cod, f.dom, s)
    return None


def classify_map(f: SpaceMap) -> MapFlags:
    surj = set(f.assignment) == set(range(f.cod.n))
    inj = len(set(f.assignment)) == len(f.assignment)
    cont = is_continuous(f)
    init = is_initial(f)
    quot = surj and cont and is_quotient(f)
    retr = surj and cont and find_section(f) is not None
    return MapFlags(
        continuous=cont,
        quotient=quot,
        initial=init,
        embedding=inj and init,
        retraction=retr,
        surjective=surj,
        injective=inj,
    )


def continuous_maps(
    X: FinSpace,
    Y: FinSpace,
    fixed: Mapping[int, int] | None = None,
    allowed: Mapping[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Enumerate continuous maps ``X -> Y`` as assignment tuples.

    ``fixed`` pins points to values; ``allowed`` restricts a point to a
    bitmask of admissible values.  Pinned points are assigned first, which
    prunes the rest of the search early.
    """
    n = X.n
    if n == 0:
        yield ()
        return
    if Y.n == 0:
        return
    fixed = dict(fixed or {})
    allowed_masks = [Y.full] * n
    if allowed:
        for p, m in allowed.items():
            allowed_masks[p] &= m
    for p, v in fixed.items():
        allowed_masks[p] &= 1 << v
    if any(m == 0 for m in allowed_masks):
        return
    order = sorted(range(n), key=lambda p: (p not in fixed, allowed_masks[p].bit_count(), p))
    pos = {p: i for i, p in enumerate(order)}
    # for each position: earlier points below it, earlier points above it
    below = []
    above = []
    for i, p in enumerate(order):
        below.append([q for q in bits(X.down[p]) if pos[q] < i])
        above.append([q for q in bits(X.nbhd[p]) if pos[q] < i])
    up_y = Y.nbhd
    down_y = Y.down
    assign = [0] * n

    def rec(i: int):
        if i == n:
            yield tuple(assign)
            return
        p = order[i]
        cand = allowed_masks[p]
        for q in below[i]:
            cand &= up_y[assign[q]]
        for q in above[i]:
            cand &= down_y[assign[q]]
        for v in bits(cand):
            assign[p] = v
            yield from rec(i + 1)

    yield from rec(0)


def find_continuous_map(
    X: FinSpace,
    Y: FinSpace,
    fixed: Mapping[int, int] | None = None,
    allowed: Mapping[int, int] | None = None,
) -> tuple[int, ...] | None:
    for f in continuous_maps(X, Y, fixed=fixed, allowed=allowed):
        return f
    return None


def all_functions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Every function ``0..n-1 -> 0..m-1``, continuity unchecked."""
    from itertools import product as iproduct

    return iproduct(range(m), repeat=n)


def compose(fs: Sequence[SpaceMap]) -> SpaceMap:
    out = fs[0]
    for g in fs[1:]:
        out = out.then(g)
    return out

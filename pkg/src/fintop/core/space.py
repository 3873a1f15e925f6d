"""Finite topological spaces stored as families of bitset opens.

Every finite topology is Alexandrov: the intersection of all opens containing
a point ``x`` is itself open.  A space is therefore fully determined by the
tuple of these minimal neighbourhoods, which is what :class:`FinSpace` keeps
internally; the open-set family is derived on demand.

Orientation of the specialization preorder, used throughout the package::

    x <= y   iff   x in cl{y}   iff   y in min_nbhd(x)

so ``min_nbhd(x)`` is the up-set of ``x`` and ``closure(x)`` its down-set.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from fintop.errors import CarrierMismatch, NotATopology, NotSurjective, TooLarge

MAX_POINTS = 16
# ceiling for internal intermediate spaces that never have their opens listed
MAX_CARRIER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def _check_size(n: int, limit: int = MAX_POINTS) -> None:
    if n < 0:
        raise ValueError(f"point count must be non-negative, got {n}")
    if n > limit:
        raise TooLarge(f"{n} points exceeds the dense limit of {limit}")


def transitive_closure(rows: Sequence[int]) -> tuple[int, ...]:
    """Reflexive-transitive closure of a relation given as successor bitmasks."""
    n = len(rows)
    reach = [rows[i] | (1 << i) for i in range(n)]
    for k in range(n):
        kbit = 1 << k
        rk = reach[k]
        for i in range(n):
            if reach[i] & kbit:
                reach[i] |= rk
    return tuple(reach)


@dataclass(frozen=True)
class Preorder:
    """Specialization preorder; ``up[x]`` is the bitmask of all ``y`` with x <= y."""

    n: int
    up: tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for x in range(self.n):
            for y in bits(self.up[x]):
                rows[y] |= 1 << x
        return tuple(rows)

    def is_antisymmetric(self) -> bool:
        return all(self.up[x] & self.down[x] == 1 << x for x in range(self.n))

    def pairs(self, strict: bool = True) -> list[tuple[int, int]]:
        """All related pairs ``(x, y)`` with x <= y (x != y when ``strict``)."""
        out = []
        for x in range(self.n):
            for y in bits(self.up[x]):
                if not strict or x != y:
                    out.append((x, y))
        return out

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs between equivalence classes, reported on class minima.

        Returns pairs ``(x, y)`` of class representatives with x < y strictly and
        nothing strictly in between.
        """
        reps = [x for x in range(self.n) if all(
            not (self.up[x] >> z & 1 and self.down[x] >> z & 1) for z in range(x))]
        out = []
        for x in reps:
            above = [y for y in reps if y != x and self.leq(x, y) and not self.leq(y, x)]
            for y in above:
                between = any(
                    z != y and self.leq(z, y) and not self.leq(y, z) for z in above)
                if not between:
                    out.append((x, y))
        return out


@dataclass(frozen=True)
class FinSpace:
    """A topology on the points ``0..n-1``.

    Build instances with :func:`make_space` (from opens) or
    :meth:`FinSpace.from_relation` (from any relation, closed transitively).
    Equality and hashing compare the labelled topology, not the homeomorphism
    class; use :func:`fintop.core.iso.canonical_form` for the latter.
    """

    n: int
    nbhd: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        _check_size(self.n, MAX_CARRIER)
        if len(self.nbhd) != self.n:
            raise ValueError("one neighbourhood mask per point is required")

    @classmethod
    def from_relation(cls, n: int, rows: Sequence[int]) -> "FinSpace":
        """Alexandrov topology of the preorder generated by ``rows``."""
        _check_size(n)
        return cls(n, transitive_closure(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def preorder(self) -> Preorder:
        return Preorder(self.n, self.nbhd)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return self.preorder.down

    @cached_property
    def opens(self) -> tuple[int, ...]:
        """All open sets as bitmasks, sorted by integer value."""
        seen = {0}
        frontier = [0]
        nb = self.nbhd
        while frontier:
            nxt = []
            for u in frontier:
                rest = self.full & ~u
                for x in bits(rest):
                    v = u | nb[x]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    def is_open(self, mask: int) -> bool:
        """Up-set test; avoids materialising the open family."""
        for x in bits(mask):
            if self.nbhd[x] & ~mask:
                return False
        return True

    def is_closed(self, mask: int) -> bool:
        return self.is_open(self.full & ~mask)

    def closure(self, x: int) -> int:
        return self.down[x]

    def min_nbhd(self, x: int) -> int:
        return self.nbhd[x]

    def interior(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            if self.nbhd[x] & ~mask == 0:
                out |= 1 << x
        return out

    def set_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.down[x]
        return out

    def opens_as_lists(self) -> list[list[int]]:
        return [sorted(bits(u)) for u in self.opens]

    def to_json(self) -> str:
        return json.dumps({"points": self.n, "opens": self.opens_as_lists()},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | dict) -> "FinSpace":
        data = json.loads(text) if isinstance(text, str) else text
        return make_space(int(data["points"]), [to_mask(o) for o in data["opens"]])

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, o)) + "}" for o in self.opens_as_lists())
        return f"FinSpace(n={self.n}, opens=[{body}])"


def make_space(n: int, opens: Iterable[int | Iterable[int]], complete: bool = False) -> FinSpace:
    """Validate ``opens`` (bitmasks or point collections) as a topology on ``n`` points.

    With ``complete=True`` the family is closed under pairwise unions and
    intersections (and gains the empty and whole sets) instead of being
    rejected.
    """
    _check_size(n)
    full = (1 << n) - 1
    family = set()
    for o in opens:
        mask = o if isinstance(o, int) else to_mask(o)
        if mask & ~full or mask < 0:
            raise NotATopology(f"open set {sorted(bits(mask))} leaves the carrier 0..{n - 1}")
        family.add(mask)
    if complete:
        family |= {0, full}
        changed = True
        while changed:
            changed = False
            cur = list(family)
            for i, u in enumerate(cur):
                for v in cur[i + 1:]:
                    for w in (u | v, u & v):
                        if w not in family:
                            family.add(w)
                            changed = True
    if 0 not in family:
        raise NotATopology("the empty set is not open")
    if full not in family:
        raise NotATopology("the whole carrier is not open")
    if not complete:
        cur = list(family)
        for i, u in enumerate(cur):
            for v in cur[i + 1:]:
                if u | v not in family or u & v not in family:
                    raise NotATopology(
                        f"not closed under union/intersection at "
                        f"{sorted(bits(u))}, {sorted(bits(v))}")
    nb = []
    for x in range(n):
        m = full
        for u in family:
            if u >> x & 1:
                m &= u
        nb.append(m)
    space = FinSpace(n, tuple(nb))
    if space.open_set != family:  # pragma: no cover - guarded by the closure checks
        raise NotATopology("family is not a topology")
    return space


@dataclass(frozen=True)
class Structure:
    preorder: Preorder
    min_nbhd: tuple[frozenset[int], ...]
    closure: tuple[frozenset[int], ...]


def structure(X: FinSpace) -> Structure:
    """Specialization preorder, minimal neighbourhoods and point closures.

    Closures are computed as complements of the union of opens missing a
    point, independently of the stored neighbourhood masks.
    """
    nb = []
    cl = []
    for x in range(X.n):
        inter = X.full
        missing = 0
        for u in X.opens:
            if u >> x & 1:
                inter &= u
            else:
                missing |= u
        nb.append(to_set(inter))
        cl.append(to_set(X.full & ~missing))
    return Structure(X.preorder, tuple(nb), tuple(cl))


# --- properties -------------------------------------------------------------

def components(X: FinSpace) -> list[int]:
    """Connected components as bitmasks, ordered by least element."""
    seen = 0
    out = []
    for x in range(X.n):
        if seen >> x & 1:
            continue
        comp = 1 << x
        frontier = comp
        while frontier:
            nxt = 0
            for y in bits(frontier):
                nxt |= X.nbhd[y] | X.down[y]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(comp)
    return out


def _is_connected_mask(X: FinSpace, mask: int) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for y in bits(frontier):
            nxt |= (X.nbhd[y] | X.down[y]) & mask
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    return comp == mask


PROPERTIES = ("T0", "T1", "connected", "locally_connected", "zero_dimensional",
              "totally_disconnected", "discrete", "indiscrete")


def check_property(X: FinSpace, prop: str) -> bool:
    """Decide one of :data:`PROPERTIES` (case-insensitive) for ``X``.

    The empty space counts as connected.
    """
    key = prop.strip().lower()
    if key == "t0":
        return len(set(X.nbhd)) == X.n
    if key in ("t1", "discrete"):
        return all(X.nbhd[x] == 1 << x for x in range(X.n))
    if key == "indiscrete":
        return all(X.nbhd[x] == X.full for x in range(X.n))
    if key == "connected":
        return X.n == 0 or len(components(X)) == 1
    if key == "totally_disconnected":
        return all(c & (c - 1) == 0 for c in components(X))
    if key == "zero_dimensional":
        # clopens form a base iff each minimal neighbourhood is clopen
        return all(X.is_closed(X.nbhd[x]) for x in range(X.n))
    if key == "locally_connected":
        # every open U containing x contains min_nbhd(x), the only open V
        # with x in V inside min_nbhd(x); so test that one set per point
        return all(_is_connected_mask(X, X.nbhd[x]) for x in range(X.n))
    raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


def finer_than(X: FinSpace, Y: FinSpace) -> bool:
    """True iff X and Y share a carrier and every open of Y is open in X."""
    if X.n != Y.n:
        raise CarrierMismatch(f"carriers differ: {X.n} vs {Y.n} points")
    return all(X.nbhd[x] & ~Y.nbhd[x] == 0 for x in range(X.n))


# --- constructions ------------------------------------------------------------

def discrete(n: int) -> FinSpace:
    _check_size(n)
    return FinSpace(n, tuple(1 << x for x in range(n)))


def indiscrete(n: int) -> FinSpace:
    _check_size(n)
    full = (1 << n) - 1
    return FinSpace(n, tuple(full for _ in range(n)))


def empty_space() -> FinSpace:
    return FinSpace(0, ())


def subspace(X: FinSpace, points: Iterable[int] | int):
    """Subspace on ``points`` with order-preserving renumbering.

    Returns ``(space, inclusion)`` where ``inclusion`` is a
    :class:`~fintop.core.maps.SpaceMap` into ``X``.
    """
    from fintop.core.maps import SpaceMap

    mask = points if isinstance(points, int) else to_mask(points)
    if mask & ~X.full:
        raise ValueError("subspace points leave the carrier")
    keep = list(bits(mask))
    index = {p: i for i, p in enumerate(keep)}
    nb = []
    for p in keep:
        nb.append(to_mask(index[q] for q in bits(X.nbhd[p] & mask)))
    sub = FinSpace(len(keep), tuple(nb))
    return sub, SpaceMap(sub, X, tuple(keep))


def topological_sum(parts: Sequence[FinSpace], limit: int = MAX_POINTS):
    """Disjoint union; returns ``(space, injections)``.

    ``limit`` may be raised up to :data:`MAX_CARRIER` for sums that are only
    folded back onto a small space.
    """
    from fintop.core.maps import SpaceMap

    nb = []
    offsets = []
    off = 0
    for P in parts:
        offsets.append(off)
        nb.extend(m << off for m in P.nbhd)
        off += P.n
    _check_size(off, min(limit, MAX_CARRIER))
    total = FinSpace(off, tuple(nb))
    injections = [SpaceMap(P, total, tuple(range(o, o + P.n)))
                  for P, o in zip(parts, offsets)]
    return total, injections


def product(X: FinSpace, Y: FinSpace):
    """Product on the row-major carrier ``x * Y.n + y``; returns ``(space, (px, py))``."""
    from fintop.core.maps import SpaceMap

    n = X.n * Y.n
    _check_size(n)
    nb = []
    for x in range(X.n):
        for y in range(Y.n):
            m = 0
            for x2 in bits(X.nbhd[x]):
                m |= Y.nbhd[y] << (x2 * Y.n)
            nb.append(m)
    P = FinSpace(n, tuple(nb))
    px = SpaceMap(P, X, tuple(i // Y.n for i in range(n)))
    py = SpaceMap(P, Y, tuple(i % Y.n for i in range(n)))
    return P, (px, py)


def final_topology(n: int, maps: Iterable[tuple[FinSpace, Sequence[int]]]) -> FinSpace:
    """Finest topology on ``n`` points making every ``(space, function)`` continuous.

    A set is open iff its preimage under each listed function is open.  On a
    finite carrier that is the Alexandrov topology of the preorder generated
    by the images of the domains' specialization pairs.
    """
    rows = [0] * n
    for dom, fn in maps:
        if len(fn) != dom.n:
            raise ValueError("function length must equal the domain size")
        for x in range(dom.n):
            fx = fn[x]
            for y in bits(dom.nbhd[x]):
                rows[fx] |= 1 << fn[y]
    return FinSpace.from_relation(n, rows)


def initial_topology(n: int, maps: Iterable[tuple[Sequence[int], FinSpace]]) -> FinSpace:
    """Coarsest topology on ``n`` points making every ``(function, space)`` continuous.

    The open sets are generated under unions and finite intersections by the
    preimages of codomain opens; the minimal neighbourhood of a point is the
    intersection of the preimages of the minimal neighbourhoods of its images.
    An empty family yields the indiscrete space.
    """
    full = (1 << n) - 1
    nb = [full] * n
    for fn, cod in maps:
        if len(fn) != n:
            raise ValueError("function length must equal the carrier size")
        pre = [0] * cod.n
        for x in range(n):
            pre[fn[x]] |= 1 << x
        for x in range(n):
            m = 0
            for c in bits(cod.nbhd[fn[x]]):
                m |= pre[c]
            nb[x] &= m
    return FinSpace(n, tuple(nb))


def quotient_by_map(X: FinSpace, fn: Sequence[int], m: int | None = None):
    """Quotient of ``X`` by a surjection onto ``0..m-1``; returns ``(space, map)``."""
    from fintop.core.maps import SpaceMap

    fn = tuple(fn)
    if len(fn) != X.n:
        raise ValueError("function length must equal the domain size")
    if m is None:
        m = max(fn) + 1 if fn else 0
    if set(fn) != set(range(m)):
        raise NotSurjective(f"function does not cover 0..{m - 1}")
    Q = final_topology(m, [(X, fn)])
    return Q, SpaceMap(X, Q, fn)

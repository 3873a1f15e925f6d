"""Glued spaces on ``X x Y``, A-sums, towers of iterated A-sums, and the P-predicate.

Carriers of spaces built on ``X x Y`` are row-major: ``(x, y)`` is point
``x * Y.n + y``.

``triangle(X, Y, b)`` carries the final topology of ``x -> (x, b)`` and of
every ``y -> (a, y)``: a copy of ``Y`` hangs from each point of ``X`` and the
copies are glued along ``X x {b}``.  ``dtriangle`` carries the initial
topology of the maps ``h_a`` into the product that keep the row of ``a`` and
squash every other row onto ``b``; it is always coarser.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from fintop.core.maps import SpaceMap, find_continuous_map, is_continuous
from fintop.core.space import (
    MAX_POINTS,
    FinSpace,
    bits,
    final_topology,
    finer_than,
    initial_topology,
    product,
    subspace,
)
from fintop.errors import ArityMismatch, BNotClosed, TooLarge, WitnessInvalid
from fintop.prime import PrimeView, prime_factor


def _require_closed_point(Y: FinSpace, b: int) -> None:
    if not 0 <= b < Y.n:
        raise ValueError(f"point {b} outside 0..{Y.n - 1}")
    if Y.down[b] != 1 << b:
        raise BNotClosed(f"{{{b}}} is not closed")


def _triangle_space(X: FinSpace, Y: FinSpace, b: int) -> FinSpace:
    m = Y.n
    maps = [(X, tuple(x * m + b for x in range(X.n)))]
    maps += [(Y, tuple(a * m + y for y in range(m))) for a in range(X.n)]
    return final_topology(X.n * m, maps)


def _dtriangle_space(X: FinSpace, Y: FinSpace, b: int) -> FinSpace:
    m = Y.n
    P, _ = product(X, Y)
    maps = []
    for a in range(X.n):
        fn = tuple(i if i // m == a else (i // m) * m + b for i in range(X.n * m))
        maps.append((fn, P))
    return initial_topology(X.n * m, maps)


@dataclass(frozen=True)
class PinchSpace:
    base: FinSpace
    x_space: FinSpace
    y_space: FinSpace
    b: int
    kind: str

    def point(self, x: int, y: int) -> int:
        return x * self.y_space.n + y

    def coords(self, p: int) -> tuple[int, int]:
        return divmod(p, self.y_space.n)


def _build(X: FinSpace, Y: FinSpace, b: int, kind: str) -> PinchSpace:
    _require_closed_point(Y, b)
    if X.n * Y.n > MAX_POINTS:
        raise TooLarge(f"{X.n} x {Y.n} points exceeds the limit of {MAX_POINTS}")
    tri = _triangle_space(X, Y, b)
    dtri = _dtriangle_space(X, Y, b)
    if not finer_than(tri, dtri):  # pragma: no cover - always holds, checked defensively
        raise AssertionError("glued topology is not finer than the initial one")
    return PinchSpace(tri if kind == "triangle" else dtri, X, Y, b, kind)


def triangle(X: FinSpace, Y: FinSpace, b: int) -> PinchSpace:
    return _build(X, Y, b, "triangle")


def dtriangle(X: FinSpace, Y: FinSpace, b: int) -> PinchSpace:
    return _build(X, Y, b, "dtriangle")


@dataclass(frozen=True)
class PinchedSubspace:
    sub: FinSpace
    q: SpaceMap
    points: tuple[int, ...]


def pinched_subspace(X: FinSpace, Y: FinSpace, a: int, b: int) -> PinchedSubspace:
    """Subspace on ``{(a, b)} u (X - a) x (Y - b)`` with the first-coordinate map onto ``X_a``."""
    T = triangle(X, Y, b)
    m = Y.n
    pts = [a * m + b] + [x * m + y for x in range(X.n) if x != a for y in range(m) if y != b]
    pts.sort()
    sub, _ = subspace(T.base, pts)
    q = SpaceMap(sub, prime_factor(X, a), tuple(p // m for p in pts))
    return PinchedSubspace(sub, q, tuple(pts))


# --- A-sums and towers ----------------------------------------------------------

@dataclass(frozen=True)
class ASum:
    space: FinSpace
    # restriction of the gluing map to A and to each part
    phi_parts: tuple[SpaceMap, ...]
    # points of the result hit by each part, in part order
    bristles: tuple[tuple[int, ...], ...]


def a_sum_with_map(A: PrimeView, parts: Sequence[tuple[FinSpace, int]]) -> ASum:
    """Glue ``parts[i]`` onto the ``i``-th isolated point of ``A`` at its basepoint.

    Points of ``A`` keep their numbers; the remaining points of each part
    follow in part order.  The quotient of the sum is computed as the final
    topology of the gluing map restricted to each summand, so the sum itself
    never has to fit in the point limit.
    """
    iso = A.isolated
    if len(parts) != len(iso):
        raise ArityMismatch(f"{len(iso)} isolated points but {len(parts)} parts")
    for P, p in parts:
        if not 0 <= p < P.n:
            raise ValueError(f"basepoint {p} outside 0..{P.n - 1}")
    nxt = A.space.n
    fns = [tuple(range(A.space.n))]
    for b, (P, p) in zip(iso, parts):
        image = []
        for x in range(P.n):
            if x == p:
                image.append(b)
            else:
                image.append(nxt)
                nxt += 1
        fns.append(tuple(image))
    if nxt > MAX_POINTS:
        raise TooLarge(f"A-sum with {nxt} points exceeds the limit of {MAX_POINTS}")
    doms = [A.space] + [P for P, _ in parts]
    space = final_topology(nxt, list(zip(doms, fns)))
    phi = tuple(SpaceMap(D, space, fn) for D, fn in zip(doms, fns))
    return ASum(space, phi, tuple(fns[1:]))


def a_sum(A: PrimeView, parts: Sequence[tuple[FinSpace, int]]) -> FinSpace:
    return a_sum_with_map(A, parts).space


@dataclass(frozen=True)
class Tower:
    a_space: PrimeView
    levels: tuple[FinSpace, ...]
    addresses: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def address_map(self) -> tuple[tuple[int, ...], ...]:
        """Address of every point of the top level; the accumulation point has ``()``."""
        return self.addresses[-1]

    def level_embedding(self, k: int) -> SpaceMap:
        """Inclusion of level ``k`` (1-based) into level ``k + 1`` by matching addresses."""
        lo, hi = self.addresses[k - 1], self.addresses[k]
        index = {t: i for i, t in enumerate(hi)}
        return SpaceMap(self.levels[k - 1], self.levels[k], tuple(index[t] for t in lo))


def tower_size(A: PrimeView, n: int) -> int:
    m = A.space.n - 1
    return 1 + sum(m ** k for k in range(1, n + 1))


def iterate_A(A: PrimeView, n: int) -> Tower:
    if n < 1:
        raise ValueError("a tower needs at least one level")
    if tower_size(A, n) > MAX_POINTS:
        raise TooLarge(f"level {n} would have {tower_size(A, n)} points")
    a = A.acc
    levels = [A.space]
    addrs = [tuple(() if x == a else (x,) for x in range(A.space.n))]
    for _ in range(n - 1):
        prev, prev_addr = levels[-1], addrs[-1]
        base = prev_addr.index(())
        built = a_sum_with_map(A, [(prev, base)] * len(A.isolated))
        addr = [None] * built.space.n
        for x in range(A.space.n):
            addr[x] = () if x == a else (x,)
        for b, image in zip(A.isolated, built.bristles):
            for x, p in enumerate(image):
                if x != base:
                    addr[p] = (b,) + prev_addr[x]
        levels.append(built.space)
        addrs.append(tuple(addr))
    return Tower(A, tuple(levels), tuple(addrs))


@dataclass(frozen=True)
class LevelBaseReport:
    base: tuple[int, ...]
    all_satisfy_eq1: bool
    is_local_base: bool
    all_clopen: bool
    min_nbhd_in_base: bool


def _prefix_closed(addr: Sequence[tuple[int, ...]], mask: int) -> bool:
    present = {addr[p] for p in bits(mask)}
    return all(t[:k] in present for t in present for k in range(1, len(t)))


def check_level_base(T: Tower) -> LevelBaseReport:
    """Scan the top level for open sets at the base point that are prefix-closed.

    For every open neighbourhood ``V`` of the base point, the set built level
    by level (keep the points of ``V`` whose address drops to a kept point) is
    checked to be open, prefix-closed and inside ``V``.
    """
    L = T.levels[-1]
    addr = T.address_map
    a = addr.index(())
    base = tuple(U for U in L.opens if U >> a & 1 and _prefix_closed(addr, U))
    depth = len(T.levels)
    ok = True
    for V in L.opens:
        if not V >> a & 1:
            continue
        kept = {()}
        for k in range(1, depth + 1):
            kept |= {addr[p] for p in bits(V) if len(addr[p]) == k and addr[p][:-1] in kept}
        U = 0
        for p in range(L.n):
            if addr[p] in kept:
                U |= 1 << p
        if not (L.is_open(U) and U & ~V == 0 and U >> a & 1 and _prefix_closed(addr, U)):
            ok = False
    local = all(any(U & ~V == 0 for U in base) for V in L.opens if V >> a & 1)
    clopen = all(L.is_closed(U) for U in base)
    return LevelBaseReport(base, ok, local, clopen, L.nbhd[a] in base)


# --- the P-predicate ---------------------------------------------------------------

@dataclass(frozen=True)
class PWitness:
    a: int
    U0: int
    f_for_Umin: SpaceMap


def _map_with_preimage(Y: FinSpace, b: int, Z: FinSpace, a: int, U0: int, V: int):
    """Continuous ``Y -> Z`` sending ``b`` to ``a`` whose preimage of ``U0`` is exactly ``V``."""
    allowed = {y: U0 if V >> y & 1 else Z.full & ~U0 for y in range(Y.n)}
    return find_continuous_map(Y, Z, fixed={b: a}, allowed=allowed)


def p_predicate(Y: FinSpace, b: int, Z: FinSpace) -> PWitness | None:
    """Decide the P-predicate at ``b``.

    In a finite space every open local base at ``b`` contains the minimal
    neighbourhood of ``b`` (a base member inside it must equal it), and that
    set alone is a local base.  So the predicate holds iff some ``a`` and
    open ``U0`` admit a map realising the minimal neighbourhood as the exact
    preimage of ``U0``.
    """
    _require_closed_point(Y, b)
    V = Y.nbhd[b]
    for a in range(Z.n):
        for U0 in Z.opens:
            if not U0 >> a & 1:
                continue
            f = _map_with_preimage(Y, b, Z, a, U0, V)
            if f is not None:
                return PWitness(a, U0, SpaceMap(Y, Z, f))
    return None


def p_predicate_brute(Y: FinSpace, b: int, Z: FinSpace) -> bool:
    """The P-predicate by quantifying over every family of open neighbourhoods of ``b``."""
    _require_closed_point(Y, b)
    nbhds = [V for V in Y.opens if V >> b & 1]
    for a in range(Z.n):
        for U0 in Z.opens:
            if not U0 >> a & 1:
                continue
            realised = [_map_with_preimage(Y, b, Z, a, U0, V) is not None for V in nbhds]
            for pick in range(1, 1 << len(nbhds)):
                fam = [nbhds[i] for i in bits(pick)]
                is_base = all(any(W & ~V == 0 for W in fam) for V in nbhds)
                if is_base and all(realised[i] for i in bits(pick)):
                    return True
    return False


def verify_lmp_source(X: FinSpace, Y: FinSpace, b: int, Z: FinSpace, witness: PWitness) -> bool:
    """Rebuild the glued space from maps into ``X``, into the coarser glued space, and into ``Z``.

    The base used is every open neighbourhood ``V`` of ``b`` realisable as an
    exact preimage of ``witness.U0``; each function ``X -> base`` gives one
    map ``(x, y) -> g_{f(x)}(y)``.  The family is enumerated in full.
    """
    _require_closed_point(Y, b)
    a, U0 = witness.a, witness.U0
    f = witness.f_for_Umin
    if (f.dom != Y or f.cod != Z or f(b) != a or not U0 >> a & 1 or not Z.is_open(U0)
            or not is_continuous(f) or f.preimage(U0) != Y.nbhd[b]):
        raise WitnessInvalid("witness does not realise the minimal neighbourhood")
    base = {}
    for V in Y.opens:
        if V >> b & 1:
            g = _map_with_preimage(Y, b, Z, a, U0, V)
            if g is not None:
                base[V] = g
    tri = triangle(X, Y, b).base
    dtri = dtriangle(X, Y, b).base
    m = Y.n
    N = X.n * m
    p = tuple(i // m for i in range(N))
    maps = [(p, X), (tuple(range(N)), dtri)]
    gs = list(base.values())
    for choice in iproduct(range(len(gs)), repeat=X.n):
        maps.append((tuple(gs[choice[i // m]][i % m] for i in range(N)), Z))
    for fn, cod in maps:
        if not is_continuous(SpaceMap(tri, cod, fn)):
            return False
    return initial_topology(N, maps) == tri


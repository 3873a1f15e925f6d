"""Membership tests for the hulls generated by a finite family of finite spaces.

Coreflective hull.  ``X`` lies in the coreflective hull of ``D`` iff ``X``
carries the final topology of the sink of *all* continuous maps from members
of ``D`` into ``X``.  If some quotient of a sum of members is ``X``, its
summand maps belong to that sink; adding maps can only coarsen a final
topology, and every map of the sink is continuous into ``X``, so the final
topology stays between ``X`` and the witnessing one, i.e. equals ``X``.  The
converse is the quotient of the sum indexed by the whole sink.

On a finite carrier the final topology is the preorder generated by the
image pairs ``(f(x), f(y))`` with ``x <= y``.  So it suffices, for each
relation ``u <= v`` of ``X``, to find one map realising it (or to derive it
transitively).  Constant maps make the sink jointly surjective as soon as
some member is nonempty.

Epireflective hull.  ``X`` lies in it iff the source of all continuous maps
from ``X`` into members is initial and jointly injective; the bireflective
hull drops injectivity.  Initiality fails exactly at a pair ``x`` not below
``y`` that every map sends to related points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from fintop.core.maps import find_continuous_map
from fintop.core.space import FinSpace, bits, transitive_closure

KINDS = ("coreflective", "epireflective", "bireflective")


@dataclass(frozen=True)
class HullResult:
    member: bool
    reason: str
    # (member index, assignment) pairs making up the witnessing sink or source
    certificate: tuple[tuple[int, tuple[int, ...]], ...] = field(default=(), repr=False)

    def __bool__(self) -> bool:
        return self.member


def _strict_pairs(X: FinSpace) -> list[tuple[int, int]]:
    return [(x, y) for x in range(X.n) for y in bits(X.nbhd[x]) if x != y]


def _coreflective(X: FinSpace, D: Sequence[FinSpace]) -> HullResult:
    if not D:
        return HullResult(False, "empty family")
    if X.n == 0:
        return HullResult(True, "empty space is the empty sum")
    if all(M.n == 0 for M in D):
        return HullResult(False, "no nonempty member; sink cannot cover the carrier")
    cert = []
    rows = [1 << x for x in range(X.n)]
    closed = tuple(rows)
    for u, v in _strict_pairs(X):
        if closed[u] >> v & 1:
            continue
        hit = None
        for i, M in enumerate(D):
            for x, y in _strict_pairs(M):
                f = find_continuous_map(M, X, fixed={x: u, y: v})
                if f is not None:
                    hit = (i, f)
                    break
            if hit:
                break
        if hit is None:
            return HullResult(False, f"relation {u} <= {v} is not realised by any map")
        cert.append(hit)
        rows[u] |= 1 << v
        closed = transitive_closure(rows)
    return HullResult(True, "final sink reproduces the topology", tuple(cert))


def _witness(X: FinSpace, D: Sequence[FinSpace], x: int, y: int, apart) -> tuple | None:
    """First map ``X -> M`` whose images of ``x, y`` satisfy ``apart(M, u, v)``."""
    for i, M in enumerate(D):
        for u in range(M.n):
            for v in range(M.n):
                if not apart(M, u, v):
                    continue
                f = find_continuous_map(X, M, fixed={x: u, y: v})
                if f is not None:
                    return i, f
    return None


def _unrelated(M: FinSpace, u: int, v: int) -> bool:
    return not M.nbhd[u] >> v & 1


def _distinct(M: FinSpace, u: int, v: int) -> bool:
    return u != v


def _source(X: FinSpace, D: Sequence[FinSpace], injective: bool) -> HullResult:
    cert = []
    for x in range(X.n):
        for y in range(X.n):
            if x == y or X.nbhd[x] >> y & 1:
                continue
            hit = _witness(X, D, x, y, _unrelated)
            if hit is None:
                return HullResult(
                    False, f"every map sends {y} into the minimal neighbourhood of the image of {x}")
            cert.append(hit)
    if injective:
        for x in range(X.n):
            for y in range(x + 1, X.n):
                if not (X.nbhd[x] >> y & 1 and X.nbhd[y] >> x & 1):
                    continue  # already separated by an initiality witness
                hit = _witness(X, D, x, y, _distinct)
                if hit is None:
                    return HullResult(False, f"points {x} and {y} are never separated")
                cert.append(hit)
    suffix = " and mono" if injective else ""
    return HullResult(True, "canonical source is initial" + suffix, tuple(cert))


def in_hull(kind: str, X: FinSpace, D: Sequence[FinSpace]) -> HullResult:
    """Decide whether ``X`` lies in the given hull of the family ``D``."""
    D = list(D)
    if kind == "coreflective":
        return _coreflective(X, D)
    if kind == "epireflective":
        return _source(X, D, injective=True)
    if kind == "bireflective":
        return _source(X, D, injective=False)
    raise ValueError(f"unknown hull kind {kind!r}; expected one of {KINDS}")

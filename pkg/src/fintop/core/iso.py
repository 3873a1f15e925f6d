"""Homeomorphism search and canonical forms.

Both routines work on the specialization preorder.  Points are first split
by an iterated colour refinement (sizes of up/down sets, then the multiset of
neighbouring colours); those colours prune the two searches.

The canonical form is the relabelling that minimises the tuple of relabelled
minimal-neighbourhood masks over all leaves of an individualise-and-refine
tree.  Because every step is label-independent, two spaces get the same
canonical form exactly when they are homeomorphic.  Twin points (points with
identical relations to every other point) are interchangeable, so only one
of them is branched on.
"""
from __future__ import annotations

from functools import lru_cache

from fintop.core.space import FinSpace, bits, to_mask


def _refine(nbhd: tuple[int, ...], down: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(nbhd)
    while True:
        sigs = []
        for x in range(n):
            ups = sorted(colors[y] for y in bits(nbhd[x]) if y != x)
            downs = sorted(colors[y] for y in bits(down[x]) if y != x)
            sigs.append((colors[x], tuple(ups), tuple(downs)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def initial_colors(X: FinSpace) -> list[int]:
    keys = [(X.nbhd[x].bit_count(), X.down[x].bit_count()) for x in range(X.n)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return _refine(X.nbhd, X.down, [ranks[k] for k in keys])


def _twins(X: FinSpace) -> list[int]:
    """Bitmask of twin partners for each point."""
    out = [0] * X.n
    for x in range(X.n):
        for y in range(x + 1, X.n):
            pair = (1 << x) | (1 << y)
            if X.nbhd[x] & ~pair != X.nbhd[y] & ~pair:
                continue
            if X.down[x] & ~pair != X.down[y] & ~pair:
                continue
            if bool(X.nbhd[x] >> y & 1) != bool(X.nbhd[y] >> x & 1):
                continue
            out[x] |= 1 << y
            out[y] |= 1 << x
    return out


def _relabel_key(nbhd: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for new, old in enumerate(perm):
        inv[old] = new
    return tuple(to_mask(inv[y] for y in bits(nbhd[old])) for old in perm)


@lru_cache(maxsize=200_000)
def _canonical(n: int, nbhd: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    X = FinSpace(n, nbhd)
    if n == 0:
        return (), ()
    down = X.down
    twins = _twins(X)
    best_key = None
    best_perm = None

    def search(colors: list[int]):
        nonlocal best_key, best_perm
        ncolors = len(set(colors))
        if ncolors == n:
            perm = [0] * n
            for x, c in enumerate(colors):
                perm[c] = x
            key = _relabel_key(nbhd, perm)
            if best_key is None or key < best_key:
                best_key, best_perm = key, perm
            return
        # first non-singleton cell in colour order
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [x for x in range(n) if colors[x] == target]
        tried = 0
        for v in cell:
            if twins[v] & tried:
                continue
            tried |= 1 << v
            split = [2 * c + (0 if x == v or c != target else 1) for x, c in enumerate(colors)]
            ranks = {c: i for i, c in enumerate(sorted(set(split)))}
            search(_refine(nbhd, down, [ranks[c] for c in split]))

    search(initial_colors(X))
    return best_key, tuple(best_perm)


def canonical_labeling(X: FinSpace) -> tuple[int, ...]:
    """Permutation ``perm`` with canonical point ``i`` = original point ``perm[i]``."""
    return _canonical(X.n, X.nbhd)[1]


def canonical_key(X: FinSpace) -> tuple[int, tuple[int, ...]]:
    """Hashable complete homeomorphism invariant."""
    return X.n, _canonical(X.n, X.nbhd)[0]


def canonical_form(X: FinSpace) -> FinSpace:
    return FinSpace(X.n, _canonical(X.n, X.nbhd)[0])


def relabel(X: FinSpace, perm) -> FinSpace:
    """Space whose point ``i`` is the point ``perm[i]`` of ``X``."""
    return FinSpace(X.n, _relabel_key(X.nbhd, list(perm)))


def find_homeomorphism(X: FinSpace, Y: FinSpace) -> tuple[int, ...] | None:
    """A bijection ``h`` (``h[x]`` = image of x) carrying opens onto opens, or None.

    Cheap invariants are compared first: point count, number of opens, and
    the degree sequence of the specialization preorder.
    """
    if X.n != Y.n:
        return None
    n = X.n
    if n == 0:
        return ()
    degs_x = sorted((X.nbhd[x].bit_count(), X.down[x].bit_count()) for x in range(n))
    degs_y = sorted((Y.nbhd[y].bit_count(), Y.down[y].bit_count()) for y in range(n))
    if degs_x != degs_y or len(X.opens) != len(Y.opens):
        return None
    # joint refinement on the disjoint union keeps colours comparable
    nb = X.nbhd + tuple(m << n for m in Y.nbhd)
    joint = FinSpace.__new__(FinSpace)
    object.__setattr__(joint, "n", 2 * n)
    object.__setattr__(joint, "nbhd", nb)
    colors = initial_colors(joint)
    cx, cy = colors[:n], colors[n:]
    if sorted(cx) != sorted(cy):
        return None
    order = sorted(range(n), key=lambda x: (sum(1 for c in cx if c == cx[x]), x))
    h = [-1] * n
    used = 0

    def consistent(x: int, y: int) -> bool:
        for x2 in range(n):
            y2 = h[x2]
            if y2 < 0:
                continue
            if bool(X.nbhd[x] >> x2 & 1) != bool(Y.nbhd[y] >> y2 & 1):
                return False
            if bool(X.nbhd[x2] >> x & 1) != bool(Y.nbhd[y2] >> y & 1):
                return False
        return True

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        x = order[i]
        for y in range(n):
            if used >> y & 1 or cy[y] != cx[x] or not consistent(x, y):
                continue
            h[x] = y
            used |= 1 << y
            if rec(i + 1):
                return True
            h[x] = -1
            used &= ~(1 << y)
        return False

    return tuple(h) if rec(0) else None


def are_homeomorphic(X: FinSpace, Y: FinSpace) -> bool:
    return find_homeomorphism(X, Y) is not None

"""Bounded universes of finite spaces, one canonical representative per class."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from fintop.core.iso import canonical_form, canonical_key
from fintop.core.space import FinSpace, bits, check_property
from fintop.errors import TooLarge

MAX_UNIVERSE = 7


@dataclass(frozen=True)
class UniversePredicate:
    name: str
    test: Callable[[FinSpace], bool]

    def __call__(self, X: FinSpace) -> bool:
        return self.test(X)


ALL = UniversePredicate("All", lambda X: True)
T0 = UniversePredicate("T0", lambda X: check_property(X, "T0"))
T1 = UniversePredicate("T1", lambda X: check_property(X, "T1"))
PREDICATES = {"all": ALL, "t0": T0, "t1": T1}


def predicate(name: str | UniversePredicate) -> UniversePredicate:
    if isinstance(name, UniversePredicate):
        return name
    try:
        return PREDICATES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; expected one of All, T0, T1") from None


def _closed_sets(X: FinSpace) -> list[int]:
    return [X.full & ~u for u in X.opens]


def _extensions(X: FinSpace):
    """Every space obtained by adding a point ``n`` lying in a maximal class.

    Each space on ``n + 1`` points arises this way from the subspace on the
    other points: remove a point of a maximal class.
    """
    n = X.n
    new = 1 << n
    # the new point alone in a maximal class, below-set any closed set
    for below in _closed_sets(X):
        nb = [X.nbhd[x] | (new if below >> x & 1 else 0) for x in range(n)]
        yield FinSpace(n + 1, tuple(nb) + (new,))
    # the new point joins an existing maximal class
    seen = set()
    for x in range(n):
        cls = X.nbhd[x]
        if cls & ~X.down[x] or cls in seen:
            continue
        seen.add(cls)
        nb = [m | new if m & cls == cls else m for m in X.nbhd]
        yield FinSpace(n + 1, tuple(nb) + (cls | new,))


@lru_cache(maxsize=None)
def _exact(n: int) -> tuple[FinSpace, ...]:
    if n == 0:
        return (FinSpace(0, ()),)
    out = {}
    for X in _exact(n - 1):
        for Y in _extensions(X):
            key = canonical_key(Y)
            if key not in out:
                out[key] = canonical_form(Y)
    return tuple(out[k] for k in sorted(out))


def universe(
    n: int,
    pred: str | UniversePredicate = ALL,
    cumulative: bool = False,
    include_empty: bool = False,
) -> tuple[FinSpace, ...]:
    """Canonical representatives of the spaces on ``n`` points satisfying ``pred``.

    With ``cumulative`` every size ``1..n`` is included; ``include_empty``
    adds the empty space.  The listing is sorted by (size, canonical key).
    """
    if n > MAX_UNIVERSE:
        raise TooLarge(f"universe enumeration is limited to {MAX_UNIVERSE} points")
    if n < 0:
        raise ValueError("n must be non-negative")
    pred = predicate(pred)
    sizes = range(1, n + 1) if cumulative else ([n] if n > 0 else [])
    out = []
    if include_empty:
        out.append(FinSpace(0, ()))
    for k in sizes:
        out.extend(X for X in _exact(k) if pred(X))
    return tuple(out)


def brute_force_classes(n: int, descending: bool = False) -> list[FinSpace]:
    """Independent enumerator: every transitive reflexive relation on ``n`` points.

    Representatives are deduplicated by explicit homeomorphism search, not by
    canonical forms, and kept in generation order.
    """
    from fintop.core.iso import find_homeomorphism

    if n > 5:
        raise TooLarge("the brute-force enumerator is limited to 5 points")
    offdiag = [(x, y) for x in range(n) for y in range(n) if x != y]
    codes = range(1 << len(offdiag))
    if descending:
        codes = reversed(codes)
    buckets: dict[tuple, list[FinSpace]] = {}
    reps = []
    for code in codes:
        rows = [1 << x for x in range(n)]
        for i in bits(code):
            x, y = offdiag[i]
            rows[x] |= 1 << y
        if any(rows[y] & ~rows[x] for x in range(n) for y in bits(rows[x])):
            continue  # not transitive
        X = FinSpace(n, tuple(rows))
        inv = (len(X.opens), tuple(sorted((X.nbhd[x].bit_count(), X.down[x].bit_count())
                                          for x in range(n))))
        bucket = buckets.setdefault(inv, [])
        if any(find_homeomorphism(X, R) is not None for R in bucket):
            continue
        bucket.append(X)
        reps.append(X)
    return reps


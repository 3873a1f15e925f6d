"""Prime spaces, prime factors and the named generator spaces.

A prime space has exactly one non-isolated point.  The prime factor
``X_a`` keeps the neighbourhoods of ``a`` and makes every other point
isolated, so it is either discrete or prime.
"""
from __future__ import annotations

from dataclasses import dataclass

from fintop.core.maps import SpaceMap
from fintop.core.space import (
    MAX_CARRIER,
    FinSpace,
    bits,
    discrete,
    indiscrete,
    make_space,
    subspace,
    to_mask,
    topological_sum,
)
from fintop.errors import BadSize, NotPrimeSubspace


@dataclass(frozen=True)
class PrimeView:
    space: FinSpace
    acc: int

    def __post_init__(self):
        X, a = self.space, self.acc
        if not 0 <= a < X.n:
            raise ValueError(f"accumulation point {a} outside 0..{X.n - 1}")
        if accumulation_points(X) != 1 << a:
            raise ValueError(f"point {a} is not the unique accumulation point")

    @property
    def isolated(self) -> list[int]:
        return [x for x in range(self.space.n) if x != self.acc]


def accumulation_points(X: FinSpace) -> int:
    """Bitmask of the points whose singleton is not open."""
    return to_mask(x for x in range(X.n) if X.nbhd[x] != 1 << x)


def is_prime(X: FinSpace) -> PrimeView | None:
    acc = accumulation_points(X)
    if acc and acc & (acc - 1) == 0:
        return PrimeView(X, acc.bit_length() - 1)
    return None


def prime_factor(X: FinSpace, a: int) -> FinSpace:
    if not 0 <= a < X.n:
        raise ValueError(f"point {a} outside 0..{X.n - 1}")
    return FinSpace(X.n, tuple(X.nbhd[a] if x == a else 1 << x for x in range(X.n)))


@dataclass(frozen=True)
class PrimeDecomposition:
    sum: FinSpace
    map: SpaceMap
    factors: tuple[FinSpace, ...]


def prime_decomposition(X: FinSpace) -> PrimeDecomposition:
    """Sum of all prime factors together with the folding map onto ``X``.

    The point ``x`` of the summand ``X_a`` is sent to ``x``.
    """
    if X.n < 1:
        raise BadSize("prime decomposition needs at least one point")
    factors = tuple(prime_factor(X, a) for a in range(X.n))
    total, _ = topological_sum(factors, limit=MAX_CARRIER)
    fold = tuple(x for _ in range(X.n) for x in range(X.n))
    return PrimeDecomposition(total, SpaceMap(total, X, fold), factors)


def prime_retraction(P: PrimeView, points) -> SpaceMap:
    """Retraction of ``P`` onto a prime subspace: identity on it, the rest goes to acc."""
    X, a = P.space, P.acc
    mask = points if isinstance(points, int) else to_mask(points)
    if not mask >> a & 1:
        raise NotPrimeSubspace(f"subset must contain the accumulation point {a}")
    if X.nbhd[a] & mask == 1 << a:
        raise NotPrimeSubspace(f"point {a} is isolated in the subspace")
    sub, _ = subspace(X, mask)
    keep = list(bits(mask))
    index = {p: i for i, p in enumerate(keep)}
    return SpaceMap(X, sub, tuple(index.get(x, index[a]) for x in range(X.n)))


# --- generators ---------------------------------------------------------------

def sierpinski() -> FinSpace:
    """Two points; 1 is isolated, 0 is not."""
    return make_space(2, [0, 0b10, 0b11])


def ordinal_prime(n: int) -> FinSpace:
    """Points 0..n; ``n`` is the accumulation point with smallest neighbourhood {n-1, n}."""
    if n < 1:
        raise BadSize(f"C(n) needs n >= 1, got {n}")
    nb = [1 << x for x in range(n)] + [(1 << n) | (1 << (n - 1))]
    return FinSpace(n + 1, tuple(nb))


def tail_space(n: int) -> FinSpace:
    """Points 0..n with opens the empty set and every tail {k..n}."""
    if n < 1:
        raise BadSize(f"B(n) needs n >= 1, got {n}")
    full = (1 << (n + 1)) - 1
    nb = [full & ~((1 << x) - 1) for x in range(n + 1)]
    return FinSpace(n + 1, tuple(nb))


def fin_prime(m: int) -> FinSpace:
    """``m`` isolated points 0..m-1 and the point ``m`` whose only neighbourhood is everything."""
    if m < 1:
        raise BadSize(f"fin_prime needs m >= 1, got {m}")
    full = (1 << (m + 1)) - 1
    return FinSpace(m + 1, tuple([1 << x for x in range(m)] + [full]))


GENERATORS = ("S", "D", "I", "C", "B")


def gen(kind: str, n: int | None = None) -> FinSpace:
    """Named generator: ``S``, ``D(n)``, ``I(n)``, ``C(n)`` or ``B(n)``."""
    if kind == "S":
        if n not in (None, 2):
            raise BadSize("S takes no size argument")
        return sierpinski()
    if n is None:
        raise BadSize(f"{kind} needs a size argument")
    if kind in ("D", "I"):
        if n < 1:
            raise BadSize(f"{kind}(n) needs n >= 1, got {n}")
        return discrete(n) if kind == "D" else indiscrete(n)
    if kind == "C":
        return ordinal_prime(n)
    if kind == "B":
        return tail_space(n)
    raise ValueError(f"unknown generator {kind!r}; expected one of {GENERATORS}")

"""A decidable fragment over the natural numbers.

Sets are finite or cofinite (:class:`FinCofSet`).  A prime space on
``omega + {star}`` is described by the filter of traces on ``omega`` of the
open sets containing ``star``: either all cofinite sets, or all supersets of
one cofinite set.  Maps change finitely many values and otherwise shift by a
constant, which keeps preimages of finite/cofinite sets finite/cofinite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from fintop.errors import BadParameters, UnsupportedMap

STAR = "*"
Point = Union[int, str]


@dataclass(frozen=True)
class FinCofSet:
    """``support`` itself when finite, its complement in omega when cofinite."""

    mode: str
    support: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.mode not in ("finite", "cofinite"):
            raise ValueError(f"mode must be 'finite' or 'cofinite', got {self.mode!r}")
        object.__setattr__(self, "support", frozenset(self.support))
        if any(not isinstance(x, int) or x < 0 for x in self.support):
            raise ValueError("support must consist of natural numbers")

    @classmethod
    def finite(cls, points: Iterable[int] = ()) -> "FinCofSet":
        return cls("finite", frozenset(points))

    @classmethod
    def cofinite(cls, missing: Iterable[int] = ()) -> "FinCofSet":
        return cls("cofinite", frozenset(missing))

    @property
    def is_finite(self) -> bool:
        return self.mode == "finite"

    def __contains__(self, x: int) -> bool:
        return (x in self.support) == self.is_finite

    def complement(self) -> "FinCofSet":
        return FinCofSet("cofinite" if self.is_finite else "finite", self.support)

    def __invert__(self) -> "FinCofSet":
        return self.complement()

    def __or__(self, other: "FinCofSet") -> "FinCofSet":
        if self.is_finite and other.is_finite:
            return FinCofSet.finite(self.support | other.support)
        if not self.is_finite and not other.is_finite:
            return FinCofSet.cofinite(self.support & other.support)
        fin, cof = (self, other) if self.is_finite else (other, self)
        return FinCofSet.cofinite(cof.support - fin.support)

    def __and__(self, other: "FinCofSet") -> "FinCofSet":
        return ~(~self | ~other)

    def __sub__(self, other: "FinCofSet") -> "FinCofSet":
        return self & ~other

    def issubset(self, other: "FinCofSet") -> bool:
        return (self - other) == FinCofSet.finite()

    def __le__(self, other: "FinCofSet") -> bool:
        return self.issubset(other)

    def __str__(self) -> str:
        return f"{{{self.mode}:[{','.join(map(str, sorted(self.support)))}]}}"


EMPTY = FinCofSet.finite()
OMEGA = FinCofSet.cofinite()


def fincof_ops(a: FinCofSet, b: FinCofSet, x: int | None = None) -> dict:
    """Union, intersection and complements of two sets, plus membership of ``x``."""
    out = {"union": a | b, "intersection": a & b,
           "complement_a": ~a, "complement_b": ~b}
    if x is not None:
        out["a_contains"] = x in a
        out["b_contains"] = x in b
    return out


@dataclass(frozen=True)
class SymbolicPrimeSpace:
    """``omega + {star}``; naturals isolated, neighbourhoods of ``star`` given by a filter."""

    filter: str = "cofinite"
    generator: FinCofSet | None = None
    star: str = STAR

    def __post_init__(self):
        if self.filter == "cofinite":
            if self.generator is not None:
                raise ValueError("the cofinite filter takes no generator")
        elif self.filter == "principal":
            if self.generator is None or self.generator.is_finite:
                raise ValueError("a principal filter needs a cofinite generator")
        else:
            raise ValueError(f"unknown filter {self.filter!r}")

    def in_filter(self, V: FinCofSet) -> bool:
        if self.filter == "cofinite":
            return not V.is_finite
        return self.generator <= V

    def __str__(self) -> str:
        if self.filter == "cofinite":
            return "Comega"
        return f"Principal({self.generator})"


C_OMEGA = SymbolicPrimeSpace("cofinite")


def principal(G: FinCofSet) -> SymbolicPrimeSpace:
    return SymbolicPrimeSpace("principal", G)


@dataclass(frozen=True)
class CofiniteSpace:
    """``omega`` with the cofinite topology: opens are the empty set and cofinite sets."""

    def is_open(self, V: FinCofSet) -> bool:
        return V == EMPTY or not V.is_finite

    def __str__(self) -> str:
        return "Cof"


COF = CofiniteSpace()


def is_open(P: SymbolicPrimeSpace, V: FinCofSet, contains_star: bool) -> bool:
    """Whether ``V`` (plus ``star`` when flagged) is open in ``P``.

    Star-free sets are always open, finite/cofinite or not.
    """
    return not contains_star or P.in_filter(V)


def finer_than_sym(P: SymbolicPrimeSpace, Q: SymbolicPrimeSpace) -> bool:
    """Every open set of ``Q`` is open in ``P``, i.e. Q's filter lies inside P's."""
    if Q.filter == "cofinite":
        return P.filter == "cofinite"
    if P.filter == "cofinite":
        return True  # supersets of a cofinite set are cofinite
    return P.generator <= Q.generator


@dataclass(frozen=True)
class FiniteModMap:
    """Map on ``omega + {star}``: ``table`` on finitely many points, ``x + shift`` elsewhere.

    ``table`` values may be naturals or ``STAR``.  Every natural below
    ``-shift`` must be in the table so the map stays inside omega.
    """

    table: Mapping[int, Point] = field(default_factory=dict)
    shift: int = 0
    star_image: Point = STAR

    def __post_init__(self):
        table = dict(self.table)
        for x, v in table.items():
            if not isinstance(x, int) or x < 0:
                raise UnsupportedMap(f"table key {x!r} is not a natural number")
            if v != STAR and (not isinstance(v, int) or v < 0):
                raise UnsupportedMap(f"table value {v!r} is neither a natural nor star")
        missing = [x for x in range(max(0, -self.shift)) if x not in table]
        if missing:
            raise UnsupportedMap(f"shift {self.shift} sends {missing[0]} below zero")
        star = self.star_image
        if star != STAR and (not isinstance(star, int) or star < 0):
            raise UnsupportedMap(f"star image {self.star_image!r} is invalid")
        # entries that agree with the shift are dropped so equal maps compare equal
        table = {x: v for x, v in table.items() if v != x + self.shift}
        object.__setattr__(self, "table", dict(sorted(table.items())))

    def __hash__(self):
        return hash((tuple(self.table.items()), self.shift, self.star_image))

    @classmethod
    def identity(cls) -> "FiniteModMap":
        return cls()

    @classmethod
    def collapse(cls, A: FinCofSet, value: Point) -> "FiniteModMap":
        """Send every point of ``A`` to ``value``; only finite ``A`` is expressible."""
        if not A.is_finite:
            raise UnsupportedMap("collapsing an infinite set needs an infinite table")
        return cls({x: value for x in A.support})

    def __call__(self, x: Point) -> Point:
        if x == STAR:
            return self.star_image
        if x in self.table:
            return self.table[x]
        return x + self.shift

    def then(self, g: "FiniteModMap") -> "FiniteModMap":
        """Composite ``g o self``."""
        table = {x: g(v) for x, v in self.table.items()}
        for y in g.table:
            x = y - self.shift
            if x >= 0 and x not in self.table:
                table[x] = g.table[y]
        return FiniteModMap(table, self.shift + g.shift, g(self.star_image))

    def star_preimage(self) -> FinCofSet:
        """Naturals sent to ``star``."""
        return FinCofSet.finite(x for x, v in self.table.items() if v == STAR)

    def preimage(self, A: FinCofSet) -> FinCofSet:
        """Naturals whose image is a natural in ``A``."""
        if A.is_finite:
            hit = {x for x, v in self.table.items() if v != STAR and v in A.support}
            hit |= {y - self.shift for y in A.support
                    if y - self.shift >= 0 and y - self.shift not in self.table}
            return FinCofSet.finite(hit)
        miss = {x for x, v in self.table.items() if v == STAR or v in A.support}
        miss |= {y - self.shift for y in A.support
                 if y - self.shift >= 0 and y - self.shift not in self.table}
        return FinCofSet.cofinite(miss)

    def image_of_finite(self, A: FinCofSet) -> set:
        if not A.is_finite:
            raise UnsupportedMap("only images of finite sets are listed")
        return {self(x) for x in A.support}


def is_continuous_sym(f: FiniteModMap, P, Q) -> bool:
    """Continuity of ``f`` between two symbolic spaces.

    Prime spaces: star-free sets are open, so only open sets around ``star``
    matter.  If ``star`` goes to a natural ``n``, the open set ``{n}`` pulls
    back to a set around ``star`` with finite trace, which no filter of
    cofinite sets contains.  Otherwise preimages are monotone, so a principal
    codomain filter needs only its generator checked, and a cofinite one
    needs every cofinite set, which a principal domain filter cannot absorb
    because the map sends infinitely many points into omega.

    Cofinite spaces: continuity means every preimage of a cofinite set is
    cofinite, i.e. finite fibres and no point sent to ``star``.
    """
    if isinstance(P, CofiniteSpace) and isinstance(Q, CofiniteSpace):
        # a finite table plus an injective shift always has finite fibres
        return f.star_preimage() == EMPTY
    if not (isinstance(P, SymbolicPrimeSpace) and isinstance(Q, SymbolicPrimeSpace)):
        raise UnsupportedMap("continuity is decided between two prime spaces or two cofinite spaces")
    if f.star_image != STAR:
        return False
    pull = f.star_preimage()
    if Q.filter == "principal":
        return P.in_filter(f.preimage(Q.generator) | pull)
    return P.filter == "cofinite"


@dataclass(frozen=True)
class ExcofWitness:
    f: FiniteModMap
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def excof_witness(F: Iterable[int], u: int, b: int) -> ExcofWitness:
    """A self-map of the cofinite space that is a bijection ``omega - F -> omega - {u}`` fixing ``b``
    and sends ``F`` to ``u``.

    Counting forces the tail shift ``1 - |F|``: below ``N`` the map pairs the
    remaining points of ``omega - F`` with those of ``omega - {u}`` in order,
    keeping ``b`` fixed; from ``N`` on it shifts.
    """
    F = frozenset(F)
    if any(not isinstance(x, int) or x < 0 for x in F | {u, b}):
        raise BadParameters("F, u and b must be natural numbers")
    if u in F:
        raise BadParameters(f"u={u} must lie outside F")
    if b in F or b == u:
        raise BadParameters(f"b={b} must lie outside F and differ from u")
    c = 1 - len(F)
    N = max(F | {u, b}) + 1 + len(F)
    low_v = [x for x in range(N) if x not in F and x != b]
    low_u = [y for y in range(N + c) if y != u and y != b]
    table: dict[int, Point] = {x: u for x in F}
    table[b] = b
    table.update(zip(low_v, low_u))
    f = FiniteModMap(table, c)

    V = FinCofSet.cofinite(F)
    U0 = FinCofSet.cofinite([u])
    h_values = [f(x) for x in range(N) if x in V]
    tail_start = N + c
    bijective = (len(h_values) == len(set(h_values))
                 and set(h_values) == {y for y in range(tail_start) if y in U0}
                 and all(f(x) == x + c for x in range(N, N + len(F) + 3)))
    checks = {
        "continuous": is_continuous_sym(f, COF, COF),
        "fixes_b": f(b) == b,
        "preimage_is_V": f.preimage(U0) == V,
        "h_bijective": bijective,
        "F_to_u": all(f(x) == u for x in F),
    }
    return ExcofWitness(f, checks)

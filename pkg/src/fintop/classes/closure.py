"""Fixed-point closures of finite families and the heredity checks run on them.

Rules:

* ``subspace``: add every nonempty subspace of a member.
* ``prime_factor``: add every prime factor of a member.
* ``quotient``: add every space within the point bound that lies in the
  coreflective hull of the current generators, i.e. every quotient of a sum
  of members that satisfies the ambient predicate.

Generators are the seeds plus whatever the first two rules add; quotient
additions never need to be generators because they already lie in the hull.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from fintop.classes.hull import in_hull
from fintop.classes.reflect import t0_reflection
from fintop.classes.universe import ALL, UniversePredicate, predicate, universe
from fintop.core.iso import canonical_form, canonical_key
from fintop.core.space import FinSpace, bits, subspace
from fintop.errors import BoundTooSmall, MemberOutsideA, NotSaturated
from fintop.prime import prime_factor

RULES = ("subspace", "prime_factor", "quotient")


def _norm_rules(rules: Iterable[str]) -> frozenset[str]:
    out = frozenset(rules)
    bad = out - set(RULES)
    if bad:
        raise ValueError(f"unknown rules {sorted(bad)}; expected a subset of {RULES}")
    return out


@dataclass(frozen=True)
class FamilyClosure:
    members: tuple[FinSpace, ...]
    seeds: tuple[FinSpace, ...]
    rules: frozenset[str]
    point_bound: int
    sum_copy_bound: int
    pred: UniversePredicate = ALL
    saturated: bool = True
    generators: tuple[FinSpace, ...] = field(default=(), repr=False, compare=False)

    @property
    def keys(self) -> frozenset:
        return frozenset(canonical_key(M) for M in self.members)

    def __contains__(self, X: FinSpace) -> bool:
        return canonical_key(X) in self._keyset

    @property
    def _keyset(self) -> frozenset:
        cache = self.__dict__.get("_keys")
        if cache is None:
            cache = self.keys
            object.__setattr__(self, "_keys", cache)
        return cache

    def to_dict(self) -> dict:
        return {
            "seeds": [json.loads(S.to_json()) for S in self.seeds],
            "rules": sorted(self.rules),
            "bounds": {"points": self.point_bound, "sum_copies": self.sum_copy_bound},
            "predicate": self.pred.name,
            "members": [json.loads(M.to_json()) for M in self.members],
            "flags": {"saturated": self.saturated},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _sorted(spaces: dict) -> tuple[FinSpace, ...]:
    return tuple(spaces[k] for k in sorted(spaces))


def _close(
    members: dict,
    generators: dict,
    rules: frozenset[str],
    bound: int,
    pred: UniversePredicate,
) -> None:
    """Grow ``members`` and ``generators`` in place to the fixed point."""
    pending = list(members.values())
    quotient_done_for = None
    while True:
        while pending:
            X = pending.pop()
            new = []
            if "subspace" in rules and X.n > 1:
                new.extend(subspace(X, X.full & ~(1 << p))[0] for p in range(X.n))
            if "prime_factor" in rules:
                new.extend(prime_factor(X, a) for a in range(X.n))
            for Y in new:
                k = canonical_key(Y)
                if k in members or not pred(Y):
                    continue
                C = canonical_form(Y)
                members[k] = C
                generators[k] = C
                pending.append(C)
        if "quotient" not in rules or not generators:
            return
        gens = frozenset(generators)
        if gens == quotient_done_for:
            return
        quotient_done_for = gens
        gen_list = _sorted(generators)
        for Y in universe(bound, pred, cumulative=True):
            k = canonical_key(Y)
            if k in members:
                continue
            if in_hull("coreflective", Y, gen_list).member:
                members[k] = Y
                pending.append(Y)
        if not pending:
            return


def saturate(
    seeds: Sequence[FinSpace],
    rules: Iterable[str] = RULES,
    point_bound: int = 4,
    sum_copy_bound: int = 3,
    pred: str | UniversePredicate = ALL,
) -> FamilyClosure:
    """Smallest family containing ``seeds`` and closed under ``rules`` within the bound.

    ``sum_copy_bound`` is recorded for reporting and cross-checks; the
    quotient rule itself uses the exact hull criterion, which needs no copy
    bound.
    """
    rules = _norm_rules(rules)
    pred = predicate(pred)
    for S in seeds:
        if S.n > point_bound:
            raise BoundTooSmall(f"seed with {S.n} points exceeds the bound {point_bound}")
        if not pred(S):
            raise MemberOutsideA(f"seed {S} does not satisfy {pred.name}")
    members = {canonical_key(S): canonical_form(S) for S in seeds if S.n > 0}
    generators = dict(members)
    _close(members, generators, rules, point_bound, pred)
    seed_map = {canonical_key(S): canonical_form(S) for S in seeds}
    return FamilyClosure(_sorted(members), _sorted(seed_map), rules, point_bound,
                         sum_copy_bound, pred, True, _sorted(generators))


class ClosureSweep:
    """Closures of many seed sets drawn from one pool, with shared work.

    The closure of ``S`` equals the closure of ``closure(S - s)`` plus ``s``;
    when ``s`` already belongs to the smaller closure nothing changes.
    """

    def __init__(self, pool: Sequence[FinSpace], rules: Iterable[str], point_bound: int,
                 sum_copy_bound: int, pred: str | UniversePredicate):
        self.pool = [canonical_form(P) for P in pool]
        self.rules = _norm_rules(rules)
        self.point_bound = point_bound
        self.sum_copy_bound = sum_copy_bound
        self.pred = predicate(pred)
        self._by_seed: dict[int, tuple[dict, dict]] = {0: ({}, {})}
        self._by_members: dict[frozenset, tuple[dict, dict]] = {}

    def _state(self, mask: int) -> tuple[dict, dict]:
        if mask in self._by_seed:
            return self._by_seed[mask]
        top = mask.bit_length() - 1
        members, gens = self._state(mask & ~(1 << top))
        s = self.pool[top]
        k = canonical_key(s)
        if k in members:
            out = (members, gens)
        else:
            memo = frozenset(members) | {k}
            out = self._by_members.get(memo)
            if out is None:
                m2 = dict(members)
                g2 = dict(gens)
                m2[k] = s
                g2[k] = s
                _close(m2, g2, self.rules, self.point_bound, self.pred)
                out = (m2, g2)
                self._by_members[memo] = out
        self._by_seed[mask] = out
        return out

    def closure(self, mask: int) -> FamilyClosure:
        members, gens = self._state(mask)
        seeds = tuple(self.pool[i] for i in bits(mask))
        return FamilyClosure(_sorted(members), seeds, self.rules, self.point_bound,
                             self.sum_copy_bound, self.pred, True, _sorted(gens))


@dataclass(frozen=True)
class HeredityReport:
    pf_closed: bool
    hereditary: bool
    lemma_forward_ok: bool
    converse_ok_on_small: bool
    counterexamples: tuple[str, ...] = ()


def _closed_not_open_points(Y: FinSpace) -> list[int]:
    return [b for b in range(Y.n) if Y.down[b] == 1 << b and Y.nbhd[b] != 1 << b]


def heredity_report(F: FamilyClosure) -> HeredityReport:
    """Compare closure under prime factors with heredity inside the bound.

    The converse direction is probed only where its witnessing construction
    fits: for a member ``X`` and a member ``Y`` with a closed, non-open point,
    the glued space on ``X x Y`` must stay within the point bound.
    """
    if not F.saturated:
        raise NotSaturated("heredity can only be judged on a saturated closure")
    pf_closed = all(prime_factor(X, a) in F for X in F.members for a in range(X.n))
    hereditary = all(subspace(X, X.full & ~(1 << p))[0] in F
                     for X in F.members if X.n > 1 for p in range(X.n))
    counter = []
    if hereditary:
        witnesses = [(Y, b) for Y in F.members for b in _closed_not_open_points(Y)]
        for X in F.members:
            fits = [Y for Y, _ in witnesses if X.n * Y.n <= F.point_bound]
            if not fits:
                continue
            for a in range(X.n):
                if prime_factor(X, a) not in F:
                    counter.append(f"{X.to_json()} at {a}")
    return HeredityReport(pf_closed, hereditary, (not pf_closed) or hereditary,
                          not counter, tuple(counter))


def r0_shadow_failures(F: FamilyClosure) -> list[str]:
    """Spaces within the bound where membership differs from membership of the T0-reflection."""
    out = []
    for X in universe(F.point_bound, ALL, cumulative=True):
        if (X in F) != (t0_reflection(X).rx in F):
            out.append(X.to_json())
    return out

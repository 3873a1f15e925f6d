"""Exhaustive verification suites over bounded universes.

Each suite returns a :class:`SuiteReport`; ``passed`` is true iff no check
failed.  Suites are deterministic: randomised ones take an explicit seed.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from fintop.classes.closure import RULES, ClosureSweep, heredity_report, r0_shadow_failures
from fintop.classes.hull import in_hull
from fintop.classes.oracle import quotient_of_sums, subspace_of_products
from fintop.classes.reflect import t0_reflection, verify_initial_singleton_fiber
from fintop.classes.universe import ALL, T0, brute_force_classes, universe
from fintop.constructions import (
    a_sum_with_map,
    check_level_base,
    dtriangle,
    iterate_A,
    p_predicate,
    p_predicate_brute,
    pinched_subspace,
    tower_size,
    triangle,
    verify_lmp_source,
)
from fintop.core.iso import canonical_form, canonical_key, find_homeomorphism
from fintop.core.maps import SpaceMap, all_functions, classify_map
from fintop.core.space import MAX_POINTS, FinSpace, check_property, finer_than, quotient_by_map, subspace
from fintop.omega import FinCofSet, excof_witness
from fintop.prime import gen, is_prime, prime_decomposition, prime_retraction

# published counts of finite topologies up to homeomorphism, by point count
PUBLISHED_COUNTS = {0: 1, 1: 1, 2: 3, 3: 9, 4: 33, 5: 139, 6: 718, 7: 4535}


@dataclass
class SuiteReport:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def check(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 50:
                self.failures.append(what() if callable(what) else str(what))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, {len(self.failures)} failures)"


def _closed_points(Y: FinSpace) -> list[int]:
    return [b for b in range(Y.n) if Y.down[b] == 1 << b]


def suite_prime_decomp(bound: int = 5) -> SuiteReport:
    rep = SuiteReport("prime_decomp")
    for X in universe(bound, cumulative=True):
        d = prime_decomposition(X)
        Q, _ = quotient_by_map(d.sum, d.map.assignment, X.n)
        rep.check(classify_map(d.map).quotient and Q == X, lambda: X.to_json())
    rep.notes["bound"] = bound
    return rep


def suite_retraction(bound: int = 6) -> SuiteReport:
    rep = SuiteReport("retraction")
    primes = 0
    for X in universe(bound, cumulative=True):
        P = is_prime(X)
        if P is None:
            continue
        primes += 1
        others = [x for x in range(X.n) if x != P.acc]
        for pick in range(1 << len(others)):
            mask = 1 << P.acc
            for i, x in enumerate(others):
                if pick >> i & 1:
                    mask |= 1 << x
            if X.nbhd[P.acc] & mask == 1 << P.acc:
                continue
            flags = classify_map(prime_retraction(P, mask))
            rep.check(flags.continuous and flags.retraction,
                      lambda: f"{X.to_json()} onto mask {mask}")
    rep.notes.update(bound=bound, prime_spaces=primes)
    return rep


def suite_pinch(bound: int = 3) -> SuiteReport:
    """Glued topology finer than the initial one; the pinched quotient is a quotient."""
    rep = SuiteReport("pinch")
    order = quot = recorded_open = 0
    spaces = universe(bound, cumulative=True)
    for X in spaces:
        for Y in spaces:
            for b in _closed_points(Y):
                order += 1
                rep.check(finer_than(triangle(X, Y, b).base, dtriangle(X, Y, b).base),
                          lambda: f"order {X.to_json()} {Y.to_json()} b={b}")
                not_open = Y.nbhd[b] != 1 << b
                for a in range(X.n):
                    flags = classify_map(pinched_subspace(X, Y, a, b).q)
                    if not_open:
                        quot += 1
                        rep.check(flags.quotient,
                                  lambda: f"quotient {X.to_json()} {Y.to_json()} a={a} b={b}")
                    elif not flags.quotient:
                        recorded_open += 1
    rep.notes.update(bound=bound, order_checks=order, quotient_checks=quot,
                     isolated_b_not_quotient=recorded_open)
    return rep


def suite_t0(bound: int = 5) -> SuiteReport:
    rep = SuiteReport("t0")
    for X in universe(bound, cumulative=True):
        r = t0_reflection(X)
        f = classify_map(r.arrow)
        rep.check(f.quotient and f.initial and f.retraction and check_property(r.rx, "T0"),
                  lambda: X.to_json())
    shadow = heredity_sweep().notes["r0_shadow_closures"]
    rep.checked += shadow
    if heredity_sweep().notes["r0_shadow_failures"]:
        rep.passed = False
        rep.failures.extend(heredity_sweep().notes["r0_shadow_failures"][:10])
    rep.notes.update(bound=bound, r0_shadow_closures=shadow)
    return rep


@lru_cache(maxsize=None)
def heredity_sweep(bound: int = 6, copies: int = 3, pool_bound: int = 3) -> SuiteReport:
    """Closures of every seed subset of the small universe, for each rule set and predicate.

    Besides "closed under prime factors implies hereditary" this also
    checks, for every closure over All that uses quotients and contains the
    two-point indiscrete space, that membership of a space and of its
    T0-reflection agree.
    """
    rep = SuiteReport("heredity")
    rule_sets = [("quotient",), ("quotient", "prime_factor"), RULES]
    indiscrete2 = canonical_key(gen("I", 2))
    seen_reports: dict = {}
    distinct = 0
    shadow_closures = 0
    shadow_fail: list[str] = []
    converse_counter: list[str] = []
    for pred in (ALL, T0):
        pool = universe(pool_bound, pred, cumulative=True)
        for rules in rule_sets:
            sweep = ClosureSweep(pool, rules, bound, copies, pred)
            for mask in range(1 << len(pool)):
                F = sweep.closure(mask)
                memo = (pred.name, F.rules, F.keys)
                if memo not in seen_reports:
                    distinct += 1
                    h = heredity_report(F)
                    shadow = None
                    if pred is ALL and indiscrete2 in F.keys:
                        shadow_closures += 1
                        shadow = r0_shadow_failures(F)
                    seen_reports[memo] = (h, shadow)
                h, shadow = seen_reports[memo]
                rep.check(h.lemma_forward_ok, lambda: f"{pred.name} {sorted(rules)} seeds={mask}")
                if h.counterexamples:
                    converse_counter.extend(h.counterexamples)
                if shadow:
                    shadow_fail.extend(shadow)
    rep.notes.update(bound=bound, sum_copy_bound=copies, distinct_closures=distinct,
                     converse_counterexamples=sorted(set(converse_counter)),
                     r0_shadow_closures=shadow_closures,
                     r0_shadow_failures=sorted(set(shadow_fail)))
    if converse_counter:
        rep.passed = False
    return rep


def suite_heredity(bound: int = 6) -> SuiteReport:
    return heredity_sweep(bound)


def suite_towers(bound: int = 4) -> SuiteReport:
    rep = SuiteReport("towers")
    towers = 0
    for A in universe(bound, cumulative=True):
        P = is_prime(A)
        if P is None:
            continue
        n = 1
        while tower_size(P, n + 1) <= MAX_POINTS:
            n += 1
        T = iterate_A(P, n)
        towers += 1
        for k, L in enumerate(T.levels, start=1):
            rep.check(L.n == tower_size(P, k), lambda: f"size {A.to_json()} level {k}")
        for k in range(1, n):
            rep.check(classify_map(T.level_embedding(k)).embedding,
                      lambda: f"embedding {A.to_json()} level {k}")
        # the base property on the top level of every shorter tower too
        for k in range(1, n + 1):
            lb = check_level_base(iterate_A(P, k))
            rep.check(lb.all_satisfy_eq1 and lb.is_local_base and lb.min_nbhd_in_base,
                      lambda: f"base {A.to_json()} n={k}")
    # bristles of A-sums are copies of their parts
    small = universe(3, cumulative=True)
    pointed = [(X, p) for X in small for p in range(X.n)]
    bristles = 0
    for A in small:
        P = is_prime(A)
        if P is None:
            continue
        for parts in iproduct(pointed, repeat=len(P.isolated)):
            built = a_sum_with_map(P, list(parts))
            for (X, _), image in zip(parts, built.bristles):
                bristles += 1
                sub, _ = subspace(built.space, set(image))
                restricted = SpaceMap(X, built.space, image)
                rep.check(classify_map(restricted).embedding and
                          find_homeomorphism(X, sub) is not None,
                          lambda: f"bristle {A.to_json()} {X.to_json()}")
    rep.notes.update(bound=bound, towers=towers, bristles=bristles)
    return rep


def suite_lmp(bound: int = 3) -> SuiteReport:
    rep = SuiteReport("lmp")
    spaces = universe(bound, cumulative=True)
    p_true = 0
    for Y in spaces:
        for b in _closed_points(Y):
            for Z in spaces:
                w = p_predicate(Y, b, Z)
                rep.check((w is not None) == p_predicate_brute(Y, b, Z),
                          lambda: f"reduction {Y.to_json()} b={b} {Z.to_json()}")
                if w is None:
                    continue
                p_true += 1
                for X in spaces:
                    rep.check(verify_lmp_source(X, Y, b, Z, w),
                              lambda: f"source {X.to_json()} {Y.to_json()} b={b} {Z.to_json()}")
    D2 = gen("D", 2)
    partitions = 0
    for Y in universe(5, cumulative=True):
        if not check_property(Y, "zero_dimensional"):
            continue
        for b in _closed_points(Y):
            partitions += 1
            rep.check(p_predicate(Y, b, D2) is not None, lambda: f"D2 {Y.to_json()} b={b}")
    rep.notes.update(bound=bound, p_true=p_true, partition_checks=partitions)
    return rep


def suite_initial_fiber(bound: int = 3) -> SuiteReport:
    rep = SuiteReport("initial_fiber")
    spaces = universe(bound, cumulative=True)
    maps = 0
    for X in spaces:
        for Y in spaces:
            if Y.n > X.n:
                continue
            for fn in all_functions(X.n, Y.n):
                f = SpaceMap(X, Y, tuple(fn))
                if len(set(fn)) != Y.n:
                    continue
                flags = classify_map(f)
                if not flags.initial:
                    continue
                for b in range(Y.n):
                    if f.preimage(1 << b).bit_count() == 1:
                        maps += 1
                        rep.check(verify_initial_singleton_fiber(f, b),
                                  lambda: f"{X.to_json()} -> {Y.to_json()} {fn} b={b}")
    rep.notes.update(bound=bound, maps=maps)
    return rep


def suite_hulls(bound: int = 3, family_bound: int = 2, copies: int = 3) -> SuiteReport:
    """Compare the map-based hull tests with explicit constructions."""
    rep = SuiteReport("hulls")
    spaces = universe(bound, cumulative=True)
    fam = universe(family_bound, cumulative=True)
    for pick in range(1 << len(fam)):
        D = [fam[i] for i in range(len(fam)) if pick >> i & 1]
        for X in spaces:
            co = in_hull("coreflective", X, D).member
            rep.check(co == quotient_of_sums(X, D, copies),
                      lambda: f"coreflective {X.to_json()} family={pick}")
            ep = in_hull("epireflective", X, D).member
            rep.check(ep == subspace_of_products(X, D, copies),
                      lambda: f"epireflective {X.to_json()} family={pick}")
    rep.notes.update(bound=bound, family_bound=family_bound, copies=copies)
    return rep


def _listing(spaces) -> str:
    return json.dumps([json.loads(X.to_json()) for X in spaces], separators=(",", ":"))


def suite_enumeration(bound: int = 4) -> SuiteReport:
    rep = SuiteReport("enumeration")
    rep.check(len(universe(2)) == 3, "two-point universe")
    counts = {}
    for n in range(1, bound + 1):
        U = universe(n)
        asc = brute_force_classes(n)
        desc = brute_force_classes(n, descending=True)
        counts[n] = [len(U), len(asc), len(desc)]
        rep.check(len(U) == len(asc) == len(desc) == PUBLISHED_COUNTS[n], f"counts n={n}")
        for R in asc:
            hits = sum(find_homeomorphism(R, X) is not None for X in U)
            rep.check(hits == 1, lambda: f"class of {R.to_json()} matched {hits} times")
        recanon = sorted((canonical_form(R) for R in desc), key=canonical_key)
        rep.check(_listing(recanon) == _listing(U), f"listing n={n}")
        rep.check(_listing(universe(n)) == _listing(U), f"stable listing n={n}")
        rep.check(all(canonical_form(X) == X for X in U), f"idempotent n={n}")
    rep.notes.update(bound=bound, counts=counts)
    return rep


def fincof_law_failures(cases: int = 1000, seed: int = 0) -> list[str]:
    rng = random.Random(seed)

    def draw() -> FinCofSet:
        pts = rng.sample(range(12), rng.randint(0, 6))
        return FinCofSet(rng.choice(["finite", "cofinite"]), pts)

    def members(A: FinCofSet) -> frozenset[int]:
        return frozenset(x for x in range(16) if x in A)

    top, bot = FinCofSet.cofinite(), FinCofSet.finite()
    out = []
    for i in range(cases):
        a, b, c = draw(), draw(), draw()
        laws = {
            "union_commutes": a | b == b | a,
            "meet_commutes": a & b == b & a,
            "union_assoc": (a | b) | c == a | (b | c),
            "meet_assoc": (a & b) & c == a & (b & c),
            "distributive": a & (b | c) == (a & b) | (a & c),
            "codistributive": a | (b & c) == (a | b) & (a | c),
            "absorption": a | (a & b) == a and a & (a | b) == a,
            "complement": a | ~a == top and a & ~a == bot,
            "involution": ~~a == a,
            "de_morgan": ~(a | b) == ~a & ~b,
            "identities": a | bot == a and a & top == a,
            "membership": members(a | b) == members(a) | members(b)
            and members(a & b) == members(a) & members(b)
            and members(~a) == frozenset(range(16)) - members(a),
        }
        out.extend(f"case {i}: {k}" for k, ok in laws.items() if not ok)
    return out


def suite_omega(instances: int = 100, law_cases: int = 1000, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("omega")
    rng = random.Random(seed)
    for i in range(instances):
        k = rng.randint(0, 10)
        pool = rng.sample(range(60), k + 2)
        F, u, b = set(pool[:k]), pool[k], pool[k + 1]
        w = excof_witness(F, u, b)
        rep.check(w.ok, lambda: f"F={sorted(F)} u={u} b={b}: {w.checks}")
    for k in range(11):
        F = set(range(1, k + 1))
        rep.check(excof_witness(F, k + 1, 0).ok, f"|F|={k}")
    laws = fincof_law_failures(law_cases, seed)
    rep.checked += law_cases
    if laws:
        rep.passed = False
        rep.failures.extend(laws[:20])
    rep.notes.update(instances=instances, law_cases=law_cases, seed=seed)
    return rep


SUITES = {
    "prime_decomp": suite_prime_decomp,
    "pinch": suite_pinch,
    "retraction": suite_retraction,
    "heredity": suite_heredity,
    "t0": suite_t0,
    "towers": suite_towers,
    "lmp": suite_lmp,
    "omega": suite_omega,
    "initial_fiber": suite_initial_fiber,
    "hulls": suite_hulls,
    "enumeration": suite_enumeration,
}


def run_suite(name: str, bound: int | None = None, seed: int | None = None) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    kwargs = {}
    if bound is not None and name != "omega":
        kwargs["bound"] = bound
    if seed is not None and name == "omega":
        kwargs["seed"] = seed
    return fn(**kwargs)

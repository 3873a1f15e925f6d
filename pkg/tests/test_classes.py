from itertools import permutations
from itertools import product as iproduct

import pytest

from fintop.classes import (
    ALL,
    T0,
    T1,
    ClosureSweep,
    brute_force_classes,
    heredity_report,
    in_ad_hull,
    in_hull,
    predicate,
    quotient_of_sums,
    r0_shadow_failures,
    saturate,
    strongly_rigid,
    subspace_of_products,
    t0_reflection,
    universe,
    verify_initial_singleton_fiber,
)
from fintop.constructions import triangle
from fintop.core import (
    SpaceMap,
    are_homeomorphic,
    canonical_form,
    check_property,
    classify_map,
    discrete,
    empty_space,
    indiscrete,
    make_space,
    relabel,
)
from fintop.errors import BoundTooSmall, MemberOutsideA, NotSaturated, PreconditionFailed, TooLarge
from fintop.prime import gen

S = gen("S")
A2 = indiscrete(2)
PUBLISHED = [1, 3, 9, 33, 139, 718]
PUBLISHED_T0 = [1, 2, 5, 16, 63, 318]


# --- T0-reflection

def test_t0_reflection_examples():
    assert t0_reflection(A2).rx == discrete(1)
    r = t0_reflection(S)
    assert r.rx == S and r.arrow.assignment == (0, 1)
    X = make_space(3, [[], [0, 1], [0, 1, 2]])
    r = t0_reflection(X)
    assert r.arrow.assignment == (0, 0, 1)
    assert are_homeomorphic(r.rx, S)


def test_t0_reflection_arrow_flags():
    for X in universe(4, cumulative=True):
        r = t0_reflection(X)
        f = classify_map(r.arrow)
        assert f.quotient and f.initial and f.retraction
        assert check_property(r.rx, "T0")


# --- hulls

def test_hull_examples():
    assert in_hull("coreflective", A2, [S]).member
    assert not in_hull("coreflective", S, [A2]).member
    assert not in_hull("epireflective", A2, [S]).member
    assert not in_hull("epireflective", S, [discrete(2)]).member
    assert in_hull("bireflective", A2, [S]).member


def test_hull_empty_family():
    r = in_hull("coreflective", S, [])
    assert not r.member and "empty" in r.reason
    assert not in_hull("coreflective", S, [empty_space()]).member


def test_hull_unknown_kind():
    with pytest.raises(ValueError):
        in_hull("reflective", S, [S])


def test_sierpinski_generates_every_finite_space():
    for X in universe(4, cumulative=True):
        assert in_hull("coreflective", X, [S]).member


def test_epireflective_hull_of_sierpinski_is_t0():
    for X in universe(4, cumulative=True):
        assert in_hull("epireflective", X, [S]).member == check_property(X, "T0")


def test_bireflective_hull_contains_indiscrete():
    for X in universe(3, cumulative=True):
        for Y in universe(3, cumulative=True):
            assert in_hull("bireflective", indiscrete(X.n), [Y]).member


def test_coreflective_certificate_is_a_sink():
    X = triangle(S, S, 0).base
    D = [S]
    r = in_hull("coreflective", X, D)
    for i, fn in r.certificate:
        assert classify_map(SpaceMap(D[i], X, fn)).continuous


def test_hull_oracles_agree_with_constructions():
    fam = universe(2, cumulative=True)
    for pick in range(1, 1 << len(fam)):
        D = [fam[i] for i in range(len(fam)) if pick >> i & 1]
        for X in universe(3, cumulative=True):
            assert in_hull("coreflective", X, D).member == quotient_of_sums(X, D)
            assert in_hull("epireflective", X, D).member == subspace_of_products(X, D)


def test_ad_hull_examples():
    assert in_ad_hull(discrete(3), [S], T1, check_members=False)
    assert not in_ad_hull(S, [S], T1, check_members=False)
    assert not in_ad_hull(A2, [S], T0)


def test_ad_hull_checks_members():
    with pytest.raises(MemberOutsideA):
        in_ad_hull(discrete(3), [S], T1)


# --- universes

def test_universe_counts():
    for n in range(1, 7):
        assert len(universe(n)) == PUBLISHED[n - 1]
        assert len(universe(n, T0)) == PUBLISHED_T0[n - 1]
        assert len(universe(n, T1)) == 1


def test_universe_small_listings():
    assert universe(1) == (discrete(1),)
    assert universe(1, include_empty=True) == (empty_space(), discrete(1))
    assert sorted(len(X.opens) for X in universe(2)) == [2, 3, 4]
    assert len(universe(3, cumulative=True)) == 1 + 3 + 9


def test_universe_members_are_canonical_and_distinct():
    for n in range(1, 5):
        U = universe(n)
        assert all(canonical_form(X) == X for X in U)
        for i, X in enumerate(U):
            for Y in U[i + 1:]:
                assert not are_homeomorphic(X, Y)


def test_universe_against_brute_force():
    for n in range(1, 5):
        for desc in (False, True):
            B = brute_force_classes(n, descending=desc)
            assert len(B) == len(universe(n))
            assert {canonical_form(X) for X in B} == set(universe(n))


def test_universe_limit():
    with pytest.raises(TooLarge):
        universe(8)


def test_predicates():
    for P in (ALL, T0, T1):
        assert P(discrete(2))
    assert predicate("t0") is T0 and predicate(T1) is T1
    with pytest.raises(ValueError):
        predicate("T2")


# --- closures

def test_saturate_sierpinski_t0():
    F = saturate([S], point_bound=4, pred=T0)
    for X in (discrete(1), discrete(2), S):
        assert X in F
    assert len(F.members) == sum(PUBLISHED_T0[:4])
    assert all(check_property(M, "T0") for M in F.members)


def test_saturate_discrete():
    F = saturate([discrete(2)], point_bound=5)
    assert set(F.members) == {discrete(n) for n in range(1, 6)}


def test_saturate_is_monotone_in_the_bound():
    small = saturate([A2, S], rules=("quotient", "prime_factor"), point_bound=3)
    big = saturate([A2, S], rules=("quotient", "prime_factor"), point_bound=4)
    assert set(small.members) <= set(big.members)


def test_saturate_errors():
    with pytest.raises(BoundTooSmall):
        saturate([discrete(5)], point_bound=4)
    with pytest.raises(MemberOutsideA):
        saturate([A2], pred=T0)


def test_closure_json_is_stable():
    a = saturate([S], point_bound=3).to_json()
    b = saturate([relabel(S, (1, 0))], point_bound=3).to_json()
    assert a == b


def test_sweep_matches_direct_saturation():
    pool = universe(2, cumulative=True)
    for rules in (("quotient",), ("subspace", "prime_factor", "quotient")):
        sweep = ClosureSweep(pool, rules, 4, 3, ALL)
        for mask in range(1 << len(pool)):
            seeds = [pool[i] for i in range(len(pool)) if mask >> i & 1]
            assert set(sweep.closure(mask).members) == set(saturate(seeds, rules, 4).members)


def test_heredity_examples():
    h = heredity_report(saturate([S], point_bound=6, pred=T0))
    assert h.lemma_forward_ok
    h = heredity_report(saturate([discrete(2)], point_bound=4))
    assert h.pf_closed and h.hereditary and h.converse_ok_on_small


def test_quotient_only_closure_of_indiscrete():
    # partition spaces: closed under quotients, not under prime factors
    F = saturate([A2], rules=("quotient",), point_bound=4)
    assert all(check_property(M, "zero_dimensional") for M in F.members)
    h = heredity_report(F)
    assert not h.pf_closed and h.lemma_forward_ok


def test_heredity_needs_saturation():
    F = saturate([S], point_bound=3)
    unsat = type(F)(F.members, F.seeds, F.rules, F.point_bound, F.sum_copy_bound, F.pred, False)
    with pytest.raises(NotSaturated):
        heredity_report(unsat)


def test_r0_shadow():
    F = saturate([A2, S], rules=("quotient", "prime_factor"), point_bound=4)
    assert not r0_shadow_failures(F)


# --- initial maps with a singleton fibre

def test_initial_fiber_examples():
    assert verify_initial_singleton_fiber(SpaceMap.identity(S), 0)
    X = make_space(3, [[], [0, 1], [0, 1, 2]])
    r = t0_reflection(X)
    b = next(y for y in range(r.rx.n) if r.rx.down[y] == 1 << y)
    assert verify_initial_singleton_fiber(r.arrow, b)


def test_initial_fiber_preconditions():
    with pytest.raises(PreconditionFailed):
        verify_initial_singleton_fiber(SpaceMap(S, discrete(1), (0, 0)), 0)
    r = t0_reflection(A2)
    with pytest.raises(PreconditionFailed):
        verify_initial_singleton_fiber(r.arrow, 0)


def test_initial_fiber_exhaustive_small():
    spaces = universe(3, cumulative=True)
    count = 0
    for X in spaces:
        for Y in spaces:
            for fn in iproduct(range(Y.n), repeat=X.n):
                f = SpaceMap(X, Y, fn)
                flags = classify_map(f)
                if not (flags.initial and flags.surjective):
                    continue
                for b in range(Y.n):
                    if fn.count(b) == 1:
                        count += 1
                        assert verify_initial_singleton_fiber(f, b)
    assert count > 0


# --- rigidity

def test_strongly_rigid_examples():
    assert strongly_rigid(discrete(1))
    assert not strongly_rigid(discrete(2))


def test_strongly_rigid_small_spaces():
    found = [X for X in universe(5, cumulative=True) if strongly_rigid(X) and X.n >= 2]
    assert [are_homeomorphic(X, S) for X in found] == [True]


def test_strongly_rigid_by_enumeration():
    for X in universe(3, cumulative=True):
        ident = tuple(range(X.n))
        expect = all(
            len(set(fn)) <= 1 or fn == ident
            for fn in iproduct(range(X.n), repeat=X.n)
            if classify_map(SpaceMap(X, X, fn)).continuous)
        assert strongly_rigid(X) == expect


def test_rigid_sierpinski_pinch_in_its_epireflective_hull():
    assert in_hull("epireflective", triangle(S, S, 0).base, [S]).member


def test_relabelled_family_same_answers():
    X = triangle(S, S, 0).base
    for p in permutations(range(2)):
        assert in_hull("coreflective", X, [relabel(S, p)]).member

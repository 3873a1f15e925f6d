from itertools import permutations
from itertools import product as iproduct

import pytest

from fintop.classes.universe import universe
from fintop.core import (
    FinSpace,
    SpaceMap,
    are_homeomorphic,
    canonical_form,
    canonical_key,
    check_property,
    classify_map,
    discrete,
    empty_space,
    final_topology,
    find_homeomorphism,
    finer_than,
    indiscrete,
    initial_topology,
    is_initial,
    make_space,
    product,
    quotient_by_map,
    relabel,
    structure,
    subspace,
    topological_sum,
)
from fintop.core.space import MAX_POINTS, bits
from fintop.errors import CarrierMismatch, NotATopology, NotSurjective, TooLarge
from fintop.prime import fin_prime, gen

S = gen("S")
A2 = indiscrete(2)


def opens(X):
    return {frozenset(o) for o in X.opens_as_lists()}


def brute_opens(n, preimage_ok):
    return {frozenset(bits(m)) for m in range(1 << n) if preimage_ok(m)}


# --- construction and validation

def test_sierpinski_literal():
    X = make_space(2, [[], [1], [0, 1]])
    assert X == S
    assert X.nbhd[1] == 0b10 and X.nbhd[0] == 0b11


def test_indiscrete_literal():
    assert make_space(2, [[], [0, 1]]) == A2


def test_missing_whole_set_rejected():
    with pytest.raises(NotATopology):
        make_space(2, [[], [0]])


def test_missing_empty_set_rejected():
    with pytest.raises(NotATopology):
        make_space(2, [[0, 1]])


def test_not_closed_under_union_rejected():
    with pytest.raises(NotATopology):
        make_space(3, [[], [0], [1], [0, 1, 2]])


def test_completion_is_opt_in():
    X = make_space(3, [[0], [1]], complete=True)
    assert opens(X) == {frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1}),
                        frozenset({0, 1, 2})}


def test_open_leaving_carrier_rejected():
    with pytest.raises(NotATopology):
        make_space(2, [[], [2], [0, 1]])


def test_size_limit():
    with pytest.raises(TooLarge):
        discrete(MAX_POINTS + 1)


def test_json_round_trip():
    for X in universe(4, cumulative=True):
        assert FinSpace.from_json(X.to_json()) == X
    assert S.to_json() == '{"points":2,"opens":[[],[1],[0,1]]}'


def test_empty_and_one_point_spaces():
    E = empty_space()
    assert E.n == 0 and E.opens == (0,)
    assert discrete(1).opens_as_lists() == [[], [0]]


# --- structure

def test_structure_matches_stored_masks():
    for X in universe(4, cumulative=True):
        st = structure(X)
        for x in range(X.n):
            assert st.min_nbhd[x] == frozenset(bits(X.nbhd[x]))
            assert st.closure[x] == frozenset(bits(X.down[x]))


def test_specialization_orientation():
    # 0 is not isolated in S and lies in the closure of 1
    assert S.preorder.leq(0, 1)
    assert not S.preorder.leq(1, 0)
    assert S.closure(1) == 0b11


def test_properties_of_generators():
    assert check_property(S, "T0") and not check_property(S, "T1")
    assert not check_property(A2, "T0")
    assert check_property(discrete(3), "zero_dimensional")
    assert check_property(gen("B", 2), "connected")
    assert not check_property(gen("C", 3), "zero_dimensional")
    assert check_property(A2, "indiscrete") and check_property(discrete(2), "discrete")


def test_partition_space_is_zero_dimensional_not_discrete():
    X = make_space(3, [[], [0, 1], [2], [0, 1, 2]])
    assert check_property(X, "zero_dimensional")
    assert not check_property(X, "discrete")
    assert not check_property(X, "totally_disconnected")


def test_finite_spaces_are_locally_connected():
    assert all(check_property(X, "locally_connected") for X in universe(5, cumulative=True))


def test_unknown_property():
    with pytest.raises(ValueError):
        check_property(S, "hausdorff")


# --- order of topologies

def test_finer_than_examples():
    assert finer_than(discrete(2), S)
    assert finer_than(S, A2) and not finer_than(A2, S)
    assert finer_than(S, S)


def test_finer_than_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        finer_than(S, discrete(3))


def test_finer_than_is_a_partial_order():
    for n in range(1, 4):
        spaces = [relabel(X, p) for X in universe(n) for p in permutations(range(n))]
        spaces = list(dict.fromkeys(spaces))
        for X in spaces:
            assert finer_than(X, X)
            for Y in spaces:
                if finer_than(X, Y) and finer_than(Y, X):
                    assert X == Y
                for Z in spaces:
                    if finer_than(X, Y) and finer_than(Y, Z):
                        assert finer_than(X, Z)


# --- constructions

def test_subspace_examples():
    assert subspace(S, [0])[0] == discrete(1)
    X = fin_prime(3)
    sub, inc = subspace(X, [0, 3])
    assert opens(sub) == {frozenset(), frozenset({0}), frozenset({0, 1})}
    assert inc.assignment == (0, 3)
    assert subspace(X, range(4))[0] == X


def test_subspace_inclusions_are_embeddings():
    for X in universe(4, cumulative=True):
        for m in range(1, 1 << X.n):
            _, inc = subspace(X, m)
            assert classify_map(inc).embedding


def test_sum_examples():
    T, inj = topological_sum([S, S])
    assert T.n == 4 and len(T.opens) == 9
    assert topological_sum([])[0] == empty_space()
    assert topological_sum([discrete(1), discrete(1)])[0] == discrete(2)
    assert [f.assignment for f in inj] == [(0, 1), (2, 3)]


def test_product_examples():
    assert product(discrete(2), discrete(2))[0] == discrete(4)
    P, _ = product(S, S)
    # product order of two chains 0 < 1
    for p in range(4):
        for q in range(4):
            expect = p // 2 <= q // 2 and p % 2 <= q % 2
            assert P.preorder.leq(p, q) == expect


def test_product_projections_jointly_initial():
    for X in universe(3, cumulative=True):
        for Y in universe(3, cumulative=True):
            P, (px, py) = product(X, Y)
            assert classify_map(px).continuous and classify_map(py).continuous
            assert initial_topology(P.n, [(px.assignment, X), (py.assignment, Y)]) == P


def test_final_topology_examples():
    assert final_topology(2, [(S, (0, 1))]) == S
    D1 = discrete(1)
    assert final_topology(2, [(D1, (0,)), (D1, (1,))]) == discrete(2)
    T, _ = topological_sum([S, S])
    assert final_topology(2, [(T, (0, 1, 1, 0))]) == A2


def test_final_topology_against_preimage_oracle():
    T, _ = topological_sum([S, S])
    for fn in [(0, 1, 1, 0), (0, 1, 2, 2), (0, 0, 1, 2), (2, 1, 0, 1)]:
        m = max(fn) + 1
        ok = brute_opens(m, lambda u: T.is_open(sum(1 << i for i in range(4) if u >> fn[i] & 1)))
        assert opens(final_topology(m, [(T, fn)])) == ok


def test_initial_topology_examples():
    assert initial_topology(2, [((0, 1), S)]) == S
    assert initial_topology(3, []) == indiscrete(3)


def test_initial_topology_against_subbase_oracle():
    # generated by preimages of opens: close them under unions and intersections
    for X in universe(3, cumulative=True):
        for fn in [(0, 0, 0, 1), (1, 0, 1, 0), (0, 1, 2, 2)]:
            fn = tuple(min(v, X.n - 1) for v in fn)
            pre = [sum(1 << i for i in range(4) if U >> fn[i] & 1) for U in X.opens]
            got = initial_topology(4, [(fn, X)])
            assert got == make_space(4, pre, complete=True)


def test_dtriangle_of_sierpinski_from_initial_family():
    # h_a(x, y) = (x, b) off row a, identity on row a, into S x S with b = 0
    P, _ = product(S, S)
    fams = []
    for a in range(2):
        fams.append((tuple(x * 2 + (y if x == a else 0) for x in range(2) for y in range(2)), P))
    from fintop.constructions import dtriangle
    assert initial_topology(4, fams) == dtriangle(S, S, 0).base


def test_quotient_examples():
    Q, q = quotient_by_map(A2, (0, 0))
    assert Q == discrete(1) and classify_map(q).quotient
    X = gen("B", 2)
    assert quotient_by_map(X, (0, 1, 2))[0] == X
    with pytest.raises(NotSurjective):
        quotient_by_map(S, (0, 0), 2)


def test_quotient_maps_classify_as_quotients():
    for X in universe(4, cumulative=True):
        for fn in [tuple(x % 2 for x in range(X.n)), tuple(0 for _ in range(X.n))]:
            if len(set(fn)) == max(fn) + 1:
                _, q = quotient_by_map(X, fn)
                assert classify_map(q).quotient


# --- maps

def test_classify_identity():
    f = classify_map(SpaceMap.identity(S))
    assert all([f.continuous, f.quotient, f.initial, f.embedding, f.retraction,
                f.surjective, f.injective])


def test_classify_collapse_to_point():
    f = classify_map(SpaceMap(S, discrete(1), (0, 0)))
    assert f.quotient and not f.initial


def test_classify_inclusion():
    f = classify_map(SpaceMap(discrete(1), S, (1,)))
    assert f.embedding and not f.quotient


def test_is_initial_against_definition():
    for X in universe(3, cumulative=True):
        for Y in universe(2, cumulative=True):
            for fn in iproduct(range(Y.n), repeat=X.n):
                f = SpaceMap(X, Y, fn)
                pre = {f.preimage(U) for U in Y.opens}
                expect = set(X.opens) == set(make_space(X.n, pre, complete=True).opens)
                assert is_initial(f) == expect


# --- homeomorphism and canonical form

def test_homeomorphism_examples():
    T = make_space(2, [[], [0], [0, 1]])
    assert find_homeomorphism(S, T) == (1, 0)
    assert find_homeomorphism(S, A2) is None
    X = make_space(3, [[], [0], [0, 1], [0, 1, 2]])
    Y = make_space(3, [[], [2], [1, 2], [0, 1, 2]])
    h = find_homeomorphism(X, Y)
    assert h is not None and relabel(X, h) == Y


def test_canonical_form_examples():
    T = make_space(2, [[], [0], [0, 1]])
    assert canonical_form(T) == canonical_form(S)
    assert canonical_form(discrete(3)) == discrete(3)
    for X in universe(4):
        assert canonical_form(X) == X


def test_canonical_key_is_complete_invariant():
    for n in range(1, 5):
        U = universe(n)
        for X in U:
            for Y in U:
                assert (canonical_key(X) == canonical_key(Y)) == are_homeomorphic(X, Y)


def test_canonical_form_ignores_labels():
    for X in universe(4, cumulative=True):
        for p in permutations(range(X.n)):
            assert canonical_form(relabel(X, p)) == X

"""Randomised invariants, driven by hypothesis with fixed seeds."""
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from fintop.classes.reflect import t0_reflection
from fintop.classes.universe import universe
from fintop.cli.parser import (
    ARITY,
    Call,
    FinCofLit,
    Gen,
    Literal,
    Num,
    PointList,
    Pointed,
    parse,
    to_source,
)
from fintop.constructions import dtriangle, triangle
from fintop.core import (
    FinSpace,
    SpaceMap,
    are_homeomorphic,
    canonical_form,
    classify_map,
    final_topology,
    finer_than,
    initial_topology,
    is_continuous,
    product,
    relabel,
    subspace,
)
from fintop.core.space import transitive_closure
from fintop.omega import FinCofSet, FiniteModMap, STAR
from fintop.prime import prime_decomposition, prime_factor

SMALL = universe(4, cumulative=True)

# --- strategies


@st.composite
def spaces(draw, max_n=5):
    """Arbitrary labelled finite spaces from a random relation."""
    n = draw(st.integers(1, max_n))
    rows = [draw(st.integers(0, (1 << n) - 1)) for _ in range(n)]
    return FinSpace(n, transitive_closure(rows))


@st.composite
def permuted(draw, max_n=5):
    X = draw(spaces(max_n))
    perm = draw(st.permutations(range(X.n)))
    return X, tuple(perm)


fincof = st.builds(lambda mode, pts: FinCofSet(mode, frozenset(pts)),
                   st.sampled_from(["finite", "cofinite"]),
                   st.sets(st.integers(0, 12), max_size=6))


def exprs():
    nat = st.integers(0, 20)
    leaves = st.one_of(
        st.builds(Num, nat),
        st.builds(PointList, st.lists(nat, max_size=4).map(tuple)),
        st.sampled_from([Gen("S"), Gen("Comega"), Gen("Cof")]),
        st.builds(Gen, st.sampled_from(["D", "I", "C", "B", "Cfin"]), st.integers(1, 9)),
        st.builds(FinCofLit, st.sampled_from(["finite", "cofinite"]),
                  st.sets(nat, max_size=4).map(lambda s: tuple(sorted(s)))),
        st.builds(Literal, st.integers(0, 3),
                  st.sets(st.lists(st.integers(0, 2), max_size=3, unique=True)
                          .map(lambda v: tuple(sorted(v))), max_size=4)
                  .map(lambda s: tuple(sorted(s)))),
    )

    def extend(inner):
        fixed = st.sampled_from(sorted(ARITY)).flatmap(
            lambda op: st.lists(inner, min_size=ARITY[op], max_size=ARITY[op])
            .map(lambda args, op=op: Call(op, tuple(args))))
        variadic = st.lists(inner, min_size=1, max_size=3).map(lambda a: Call("sum", tuple(a)))
        asum = st.tuples(inner, st.lists(st.builds(Pointed, inner, nat), max_size=3)).map(
            lambda t: Call("asum", (t[0],) + tuple(t[1])))
        return st.one_of(fixed, variadic, asum)

    return st.recursive(leaves, extend, max_leaves=8)


# --- finite/cofinite algebra

@seed(11)
@settings(max_examples=300)
@given(fincof, fincof, fincof)
def test_fincof_boolean_laws(a, b, c):
    top, bot = FinCofSet.cofinite(), FinCofSet.finite()
    assert a | b == b | a and a & b == b & a
    assert (a | b) | c == a | (b | c) and (a & b) & c == a & (b & c)
    assert a & (b | c) == (a & b) | (a & c)
    assert a | (b & c) == (a | b) & (a | c)
    assert a | (a & b) == a and a & (a | b) == a
    assert a | ~a == top and a & ~a == bot
    assert ~~a == a and ~(a & b) == ~a | ~b


@seed(12)
@settings(max_examples=300)
@given(fincof, fincof, st.integers(0, 15))
def test_fincof_membership(a, b, x):
    assert (x in a | b) == (x in a or x in b)
    assert (x in a & b) == (x in a and x in b)
    assert (x in ~a) == (x not in a)
    if a <= b:
        assert x not in a or x in b


@st.composite
def mod_maps(draw):
    keys = draw(st.sets(st.integers(0, 10), max_size=5))
    shift = draw(st.integers(0, 3))
    table = {k: draw(st.one_of(st.integers(0, 12), st.just(STAR))) for k in keys}
    return FiniteModMap(table, shift, draw(st.one_of(st.just(STAR), st.integers(0, 5))))


@seed(13)
@settings(max_examples=200)
@given(mod_maps(), mod_maps(), fincof)
def test_mod_maps_compose_and_pull_back(f, g, A):
    h = f.then(g)
    for x in list(range(40)) + [STAR]:
        assert h(x) == g(f(x))
    pre = f.preimage(A)
    for x in range(40):
        assert (x in pre) == (f(x) != STAR and f(x) in A)


# --- parser

@seed(14)
@settings(max_examples=300)
@given(exprs())
def test_parse_print_round_trip(e):
    assert parse(to_source(e)) == e


# --- spaces

@seed(15)
@settings(max_examples=150)
@given(permuted())
def test_canonical_form_is_label_free(pair):
    X, perm = pair
    Y = relabel(X, perm)
    assert canonical_form(X) == canonical_form(Y)
    assert are_homeomorphic(X, Y)


@seed(16)
@settings(max_examples=150)
@given(spaces())
def test_canonical_form_idempotent(X):
    C = canonical_form(X)
    assert canonical_form(C) == C and are_homeomorphic(C, X)


@seed(17)
@settings(max_examples=100)
@given(spaces(4), spaces(4), st.data())
def test_final_and_initial_topologies_are_extremal(X, Y, data):
    fn = tuple(data.draw(st.integers(0, Y.n - 1)) for _ in range(X.n))
    F = final_topology(Y.n, [(X, fn)])
    I = initial_topology(X.n, [(fn, Y)])
    assert is_continuous(SpaceMap(X, F, fn)) and is_continuous(SpaceMap(I, Y, fn))
    if is_continuous(SpaceMap(X, Y, fn)):
        assert finer_than(F, Y) and finer_than(X, I)


@seed(18)
@settings(max_examples=100)
@given(spaces(4), spaces(4), st.data())
def test_continuity_composes(X, Y, data):
    Z = data.draw(st.sampled_from(SMALL))
    f = SpaceMap(X, Y, tuple(data.draw(st.integers(0, Y.n - 1)) for _ in range(X.n)))
    g = SpaceMap(Y, Z, tuple(data.draw(st.integers(0, Z.n - 1)) for _ in range(Y.n)))
    if is_continuous(f) and is_continuous(g):
        assert is_continuous(f.then(g))


@seed(19)
@settings(max_examples=100)
@given(spaces(4), st.data())
def test_subspace_inclusion_is_embedding(X, data):
    mask = data.draw(st.integers(1, X.full))
    assert classify_map(subspace(X, mask)[1]).embedding


@seed(20)
@settings(max_examples=100)
@given(spaces(5))
def test_prime_decomposition_reconstructs(X):
    d = prime_decomposition(X)
    assert final_topology(X.n, [(d.sum, d.map.assignment)]) == X
    assert all(f == prime_factor(X, a) for a, f in enumerate(d.factors))


@seed(21)
@settings(max_examples=100)
@given(spaces(5))
def test_t0_reflection_properties(X):
    r = t0_reflection(X)
    f = classify_map(r.arrow)
    assert f.quotient and f.initial and f.retraction
    assert len(set(r.rx.nbhd)) == r.rx.n


@seed(22)
@settings(max_examples=60)
@given(permuted(3), st.data())
def test_constructions_commute_with_relabelling(pair, data):
    X, perm = pair
    pointed = [(Y, b) for Y in universe(3, cumulative=True)
               for b in range(Y.n) if Y.down[b] == 1 << b]
    Y, b = data.draw(st.sampled_from(pointed))
    Xp = relabel(X, perm)
    assert are_homeomorphic(triangle(X, Y, b).base, triangle(Xp, Y, b).base)
    assert are_homeomorphic(dtriangle(X, Y, b).base, dtriangle(Xp, Y, b).base)
    assert are_homeomorphic(product(X, Y)[0], product(Xp, Y)[0])

"""Evaluation of parsed construction expressions."""
from __future__ import annotations

from fintop.classes.reflect import t0_reflection
from fintop.cli.parser import Expr, FinCofLit, Gen, Literal, Num, PointList, Pointed
from fintop.constructions import a_sum, dtriangle, iterate_A, pinched_subspace, triangle
from fintop.core.space import FinSpace, make_space, product, quotient_by_map, subspace, topological_sum
from fintop.errors import BadParameters, FinTopError
from fintop.omega import C_OMEGA, COF, FinCofSet
from fintop.prime import fin_prime, gen, is_prime, prime_factor


class EvalError(FinTopError, ValueError):
    pass


def _space(v, what: str) -> FinSpace:
    if not isinstance(v, FinSpace):
        raise EvalError(f"{what} must be a finite space, got {v}")
    return v


def _point(v, X: FinSpace, what: str) -> int:
    if not isinstance(v, int):
        raise EvalError(f"{what} must be a point index")
    if not 0 <= v < X.n:
        raise EvalError(f"{what} = {v} outside 0..{X.n - 1}")
    return v


def _points(v, what: str) -> tuple[int, ...]:
    if not isinstance(v, tuple):
        raise EvalError(f"{what} must be a point list like [0, 1]")
    return v


def _prime(X: FinSpace):
    P = is_prime(X)
    if P is None:
        raise EvalError("the first argument must be a prime space (exactly one non-isolated point)")
    return P


def evaluate(e: Expr):
    """A :class:`FinSpace`, a symbolic omega value, an int or a point tuple."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, PointList):
        return e.values
    if isinstance(e, Literal):
        return make_space(e.points, e.opens)
    if isinstance(e, FinCofLit):
        return FinCofSet(e.mode, e.support)
    if isinstance(e, Gen):
        if e.name == "Comega":
            return C_OMEGA
        if e.name == "Cof":
            return COF
        if e.name == "Cfin":
            return fin_prime(e.size)
        return gen(e.name, e.size)
    if isinstance(e, Pointed):
        raise EvalError("pointed spaces X@p only appear inside asum")
    args = [evaluate(a) for a in e.args] if e.op != "asum" else []
    op = e.op
    if op == "sum":
        return topological_sum([_space(a, "summand") for a in args])[0]
    if op == "prod":
        return product(_space(args[0], "factor"), _space(args[1], "factor"))[0]
    if op == "sub":
        X = _space(args[0], "space")
        pts = _points(args[1], "points")
        for p in pts:
            _point(p, X, "point")
        return subspace(X, pts)[0]
    if op == "q":
        X = _space(args[0], "space")
        fn = _points(args[1], "quotient map")
        if len(fn) != X.n:
            raise EvalError(f"quotient map needs {X.n} values, got {len(fn)}")
        return quotient_by_map(X, fn)[0]
    if op == "pf":
        X = _space(args[0], "space")
        return prime_factor(X, _point(args[1], X, "point"))
    if op in ("tri", "dtri"):
        X, Y = _space(args[0], "X"), _space(args[1], "Y")
        b = _point(args[2], Y, "b")
        return (triangle if op == "tri" else dtriangle)(X, Y, b).base
    if op == "pinch":
        X, Y = _space(args[0], "X"), _space(args[1], "Y")
        return pinched_subspace(X, Y, _point(args[2], X, "a"), _point(args[3], Y, "b")).sub
    if op == "tower":
        P = _prime(_space(args[0], "A"))
        n = args[1]
        if not isinstance(n, int) or n < 1:
            raise EvalError("tower level must be a positive integer")
        return iterate_A(P, n).levels[-1]
    if op == "r0":
        return t0_reflection(_space(args[0], "space")).rx
    if op == "asum":
        P = _prime(_space(evaluate(e.args[0]), "A"))
        parts = []
        for pe in e.args[1:]:
            X = _space(evaluate(pe.expr), "part")
            parts.append((X, _point(pe.point, X, "basepoint")))
        return a_sum(P, parts)
    raise BadParameters(f"unknown operator {op!r}")

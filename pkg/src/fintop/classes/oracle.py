"""Brute-force hull membership by explicit constructions, used to cross-check :mod:`hull`."""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

from fintop.core.maps import SpaceMap, continuous_maps, is_initial
from fintop.core.space import FinSpace, final_topology, product, topological_sum


def quotient_of_sums(X: FinSpace, D: Sequence[FinSpace], max_summands: int = 3) -> bool:
    """Is ``X`` a quotient of a sum of at most ``max_summands`` members of ``D``?"""
    for k in range(max_summands + 1):
        for combo in combinations_with_replacement(range(len(D)), k):
            total, _ = topological_sum([D[i] for i in combo])
            if total.n < X.n or (total.n == 0) != (X.n == 0):
                continue
            for f in continuous_maps(total, X):
                if len(set(f)) == X.n and final_topology(X.n, [(total, f)]) == X:
                    return True
    return False


def subspace_of_products(X: FinSpace, D: Sequence[FinSpace], max_factors: int = 3) -> bool:
    """Does ``X`` embed into a product of at most ``max_factors`` members of ``D``?"""
    for k in range(max_factors + 1):
        for combo in combinations_with_replacement(range(len(D)), k):
            P = FinSpace(1, (1,))
            for i in combo:
                P, _ = product(P, D[i])
            if P.n < X.n:
                continue
            for f in continuous_maps(X, P):
                if len(set(f)) == X.n and is_initial(SpaceMap(X, P, f)):
                    return True
    return False

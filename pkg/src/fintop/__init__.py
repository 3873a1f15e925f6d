"""Finite topological spaces: constructions, hulls, closures and exhaustive checks.

Subpackages: :mod:`fintop.core` (spaces and maps), :mod:`fintop.prime`,
:mod:`fintop.constructions`, :mod:`fintop.classes`, :mod:`fintop.omega`,
:mod:`fintop.verify` and :mod:`fintop.cli`.
"""
from fintop.core import FinSpace, SpaceMap, canonical_form, classify_map, make_space
from fintop.prime import gen, is_prime, prime_decomposition

__version__ = "0.1.0"

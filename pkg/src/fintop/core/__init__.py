"""Finite spaces, maps between them, and homeomorphism tools."""
from fintop.core.iso import (
    are_homeomorphic,
    canonical_form,
    canonical_key,
    canonical_labeling,
    find_homeomorphism,
    relabel,
)
from fintop.core.maps import (
    MapFlags,
    SpaceMap,
    all_functions,
    classify_map,
    compose,
    continuous_maps,
    find_continuous_map,
    find_section,
    is_continuous,
    is_initial,
    is_quotient,
)
from fintop.core.space import (
    MAX_CARRIER,
    MAX_POINTS,
    PROPERTIES,
    FinSpace,
    Preorder,
    Structure,
    bits,
    check_property,
    components,
    discrete,
    empty_space,
    final_topology,
    finer_than,
    indiscrete,
    initial_topology,
    make_space,
    product,
    quotient_by_map,
    structure,
    subspace,
    to_mask,
    to_set,
    topological_sum,
)

"""Hull membership, universes of small spaces, and closures of families."""
from fintop.classes.closure import (
    RULES,
    ClosureSweep,
    FamilyClosure,
    HeredityReport,
    heredity_report,
    r0_shadow_failures,
    saturate,
)
from fintop.classes.hull import KINDS, HullResult, in_hull
from fintop.classes.oracle import quotient_of_sums, subspace_of_products
from fintop.classes.reflect import (
    T0Reflection,
    in_ad_hull,
    strongly_rigid,
    t0_reflection,
    verify_initial_singleton_fiber,
)
from fintop.classes.universe import (
    ALL,
    T0,
    T1,
    UniversePredicate,
    brute_force_classes,
    predicate,
    universe,
)

"""Finite left skew brace computations, backed by the C++ core."""

from ._skewbrace import (
    Brace,
    BraceError,
    centre,
    chief_series,
    classify,
    commutator,
    derived_series,
    enumerate_braces,
    fitting,
    fix,
    frattini,
    from_json,
    groups_of_order,
    ideal_closure,
    idealiser,
    is_isomorphic,
    kernel_lambda,
    load,
    lower_central_series,
    nilpotency_class,
    run_manifest,
    socle,
    star_span,
    subbrace_closure,
    subideal_series,
    substructures,
    sylow,
    trivial,
    upper_central_series,
    validate,
    ybe_solution,
)

__all__ = [
    "Brace",
    "BraceError",
    "centre",
    "chief_series",
    "classify",
    "commutator",
    "derived_series",
    "enumerate_braces",
    "fitting",
    "fix",
    "frattini",
    "from_json",
    "groups_of_order",
    "ideal_closure",
    "idealiser",
    "is_isomorphic",
    "kernel_lambda",
    "load",
    "lower_central_series",
    "nilpotency_class",
    "run_manifest",
    "socle",
    "star_span",
    "subbrace_closure",
    "subideal_series",
    "substructures",
    "sylow",
    "trivial",
    "upper_central_series",
    "validate",
    "ybe_solution",
]

from conformal.maps import (
    DISK,
    HALFPLANE,
    Cayley,
    Composition,
    ConformalMap,
    Identity,
    Mobius,
    PowerWedge,
    Rotation,
    automorphism_to,
    domain_contains,
    map_from_dict,
    map_from_spec,
)
from conformal.pullback import (
    IsometryCheck,
    TransportedRatio,
    boundary_pullback,
    discrete_laplacian,
    harmonic_evaluator,
    isometry_check,
    pullback,
    transported_ratio,
)

__all__ = [
    "DISK",
    "HALFPLANE",
    "Cayley",
    "Composition",
    "ConformalMap",
    "Identity",
    "IsometryCheck",
    "Mobius",
    "PowerWedge",
    "Rotation",
    "TransportedRatio",
    "automorphism_to",
    "boundary_pullback",
    "discrete_laplacian",
    "domain_contains",
    "harmonic_evaluator",
    "isometry_check",
    "map_from_dict",
    "map_from_spec",
    "pullback",
    "transported_ratio",
]

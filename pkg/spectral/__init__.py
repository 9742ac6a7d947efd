from spectral.series import (
    BoundarySamples,
    TrigSeries,
    analyze,
    circle_nodes,
    random_real_series,
    synthesize,
)
from spectral.circle import (
    circle_values,
    conjugate_series,
    hardy_norm,
    integral_mean,
    parseval_mean,
    poisson_extend,
    refine,
)

__all__ = [
    "BoundarySamples",
    "TrigSeries",
    "analyze",
    "circle_nodes",
    "circle_values",
    "conjugate_series",
    "hardy_norm",
    "integral_mean",
    "parseval_mean",
    "poisson_extend",
    "random_real_series",
    "refine",
    "synthesize",
]

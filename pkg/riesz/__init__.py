from riesz.constants import IdentityValues, conjugate_exponent, identity_z, verbitsky_constant
from riesz.engine import (
    ProofChain,
    RieszReport,
    analytic_series,
    normalized_conjugate,
    proof_chain,
    proof_majorant_check,
    riesz_ratio_disk,
    riesz_ratio_grid,
    sharpness_family,
)
from riesz.sweep import EXPLORATORY, SweepSummary, TrialResult, conjecture_sweep

__all__ = [
    "EXPLORATORY",
    "IdentityValues",
    "ProofChain",
    "RieszReport",
    "SweepSummary",
    "TrialResult",
    "analytic_series",
    "conjecture_sweep",
    "conjugate_exponent",
    "identity_z",
    "normalized_conjugate",
    "proof_chain",
    "proof_majorant_check",
    "riesz_ratio_disk",
    "riesz_ratio_grid",
    "sharpness_family",
    "verbitsky_constant",
]

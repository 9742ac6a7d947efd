import os
from fractions import Fraction

from dotenv import load_dotenv

load_dotenv()


def _env_float(name, default):
    # Fraction() accepts "1/64" as well as plain decimals
    return float(Fraction(os.getenv(f"LUMER_{name}", default)))


def _env_int(name, default):
    return int(os.getenv(f"LUMER_{name}", default))


class Config:
    # Spectral sampling on the unit circle
    SAMPLE_COUNT = _env_int("SAMPLE_COUNT", "256")
    MAX_SAMPLE_COUNT = _env_int("MAX_SAMPLE_COUNT", "65536")
    REFINE_TOL = _env_float("REFINE_TOL", "1e-9")
    REAL_TOL = _env_float("REAL_TOL", "1e-10")

    # Grid Dirichlet solver
    SOLVER_TOL = _env_float("SOLVER_TOL", "1e-10")
    SOLVER_MAXITER = _env_int("SOLVER_MAXITER", "1000000")
    GRID_SPACING = _env_float("GRID_SPACING", "1/64")

    # Period (existence) test: |period| <= max(FLOOR, FACTOR * h^2 * length * max|grad u|)
    PERIOD_FLOOR = _env_float("PERIOD_FLOOR", "1e-6")
    PERIOD_FACTOR = _env_float("PERIOD_FACTOR", "10")

    # Theorem-backed tolerances used for exit statuses
    BOUND_TOL = _env_float("BOUND_TOL", "1e-9")
    SHARPNESS_TOL = _env_float("SHARPNESS_TOL", "1e-12")
    GRID_BOUND_SLACK = _env_float("GRID_BOUND_SLACK", "0.02")
    ISOMETRY_TOL = _env_float("ISOMETRY_TOL", "1e-7")

    # Experiments
    DEFAULT_SEED = _env_int("DEFAULT_SEED", "42")
    WORKERS = _env_int("WORKERS", "1")
    OUTPUT_FORMAT = os.getenv("LUMER_OUTPUT_FORMAT", "csv")
    LOG_LEVEL = os.getenv("LUMER_LOG_LEVEL", "INFO")

"""Randomized sweeps of the Riesz ratio over real trigonometric polynomials.

Trials draw from child streams of one SeedSequence, so a sweep is fully
determined by its seed regardless of worker count or completion order.
Outside p = 2 the bound is the classical disk constant and every summary is
labeled EXPLORATORY.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from config import Config
from riesz.constants import verbitsky_constant
from riesz.engine import RieszReport, riesz_ratio_disk
from spectral.series import random_real_series
from utils.errors import InvalidParameter, LumerError
from utils.helpers import format_margin, require_exponent

log = logging.getLogger("lumer.riesz")

EXPLORATORY = "EXPLORATORY"


class TrialResult(NamedTuple):
    trial: int
    degree: int
    report: RieszReport | None
    error: str | None = None


@dataclass(frozen=True)
class SweepSummary:
    p: float
    trials: int
    degree_cap: int
    seed: int
    zeta0: complex
    bound: float
    rows: tuple
    label: str = EXPLORATORY

    @property
    def reports(self):
        return [row.report for row in self.rows if row.report is not None]

    @property
    def errors(self):
        return [row for row in self.rows if row.error is not None]

    @property
    def best(self):
        """Row with the largest ratio; ties go to the lowest trial index"""
        scored = [row for row in self.rows if row.report is not None]
        if not scored:
            return None
        return max(scored, key=lambda row: (row.report.ratio, -row.trial))

    @property
    def max_ratio(self):
        best = self.best
        return best.report.ratio if best else None

    @property
    def argmax(self):
        best = self.best
        if best is None:
            return "no successful trial"
        return f"trial {best.trial} (seed {self.seed}, degree {best.degree})"

    @property
    def margin(self):
        ratio = self.max_ratio
        return None if ratio is None else self.bound - ratio

    @property
    def theorem_backed(self):
        return self.p == 2.0

    def within_bound(self, tol=None):
        tol = Config.BOUND_TOL if tol is None else tol
        return self.margin is None or self.margin >= -tol


def _run_trial(trial, sequence, p, degree_cap, zeta0, seed):
    rng = np.random.default_rng(sequence)
    u = random_real_series(rng, degree_cap)
    try:
        report = riesz_ratio_disk(u, zeta0, p, seed=seed)
    except LumerError as e:
        log.warning(f"⚠️ Trial {trial} (seed {seed}) skipped: {e}")
        return TrialResult(trial, degree_cap, None, str(e))
    return TrialResult(trial, degree_cap, report)


def conjecture_sweep(p, trials, degree_cap, seed=None, zeta0=0.0, workers=None):
    """Max Riesz ratio over `trials` random real polynomials of degree `degree_cap`"""
    p = require_exponent(p)
    if isinstance(trials, bool) or int(trials) != trials or trials < 1:
        raise InvalidParameter(f"trials must be a positive integer, got {trials}")
    if isinstance(degree_cap, bool) or int(degree_cap) != degree_cap or degree_cap < 0:
        raise InvalidParameter(f"degree cap must be a non-negative integer, got {degree_cap}")
    seed = Config.DEFAULT_SEED if seed is None else int(seed)
    workers = max(1, workers or Config.WORKERS)
    trials, degree_cap = int(trials), int(degree_cap)

    sequences = np.random.SeedSequence(seed).spawn(trials)
    jobs = [(k, sequences[k], p, degree_cap, zeta0, seed) for k in range(trials)]
    if workers == 1:
        rows = [_run_trial(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # map() yields in submission order
            rows = list(pool.map(lambda job: _run_trial(*job), jobs))

    summary = SweepSummary(
        p=p, trials=trials, degree_cap=degree_cap, seed=seed, zeta0=complex(zeta0),
        bound=verbitsky_constant(p), rows=tuple(rows),
    )
    if summary.max_ratio is None:
        log.warning(f"⚠️ [{EXPLORATORY}] p={p:g}: every trial failed")
    else:
        log.info(
            f"✅ [{EXPLORATORY}] p={p:g}, {trials} trials, degree {degree_cap}: "
            f"{format_margin(summary.max_ratio, summary.bound)} at {summary.argmax}"
        )
    return summary

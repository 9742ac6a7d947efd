import logging

import numpy as np

from config import Config
from conformal.maps import map_from_spec
from conformal.pullback import isometry_check
from runner.core import EXIT_BOUND_FAILURE, EXIT_OK, Command
from runner.output import point_columns
from runner.specs import parse_point
from spectral.series import random_real_series
from utils.helpers import parse_number

log = logging.getLogger("lumer.commands.conformal")


class ConformalCommand(Command):
    name = "conformal"
    help = "Isometry of Lumer norms under a disk automorphism, on random real polynomials"
    columns = (
        "row", "seed", "degree", "p", "zeta0_re", "zeta0_im", "zeta_tilde_re", "zeta_tilde_im",
        "norm_before", "norm_after", "discrepancy",
    )

    def configure(self, parser):
        parser.add_argument("--map", required=True, help='JSON descriptor, e.g. \'{"kind": "mobius", "a": 0.3}\'')
        parser.add_argument("--zeta0", type=parse_point, default=0j, help="base point 're,im' in the disk")
        parser.add_argument("--trials", type=int, default=100)
        parser.add_argument("--degree", type=int, default=8)
        parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
        parser.add_argument("--p", type=parse_number, default=2.0)
        parser.add_argument("--samples", type=int, default=2048, help="boundary nodes for the pulled-back series")

    def run(self, args, writer):
        conformal_map = map_from_spec(args.map)
        sequences = np.random.SeedSequence(args.seed).spawn(max(args.trials, 0))
        worst = 0.0
        for trial, sequence in enumerate(sequences):
            u = random_real_series(np.random.default_rng(sequence), args.degree)
            check = isometry_check(u, conformal_map, args.zeta0, args.p, n_samples=args.samples)
            worst = max(worst, check.discrepancy)
            writer.write({
                "row": trial, "seed": args.seed, "degree": args.degree, "p": args.p,
                **point_columns("zeta0", args.zeta0), **point_columns("zeta_tilde", check.zeta_tilde),
                "norm_before": check.norm_before, "norm_after": check.norm_after,
                "discrepancy": check.discrepancy,
            })
        writer.write({"row": "summary", "seed": args.seed, "degree": args.degree, "p": args.p,
                      **point_columns("zeta0", args.zeta0), "discrepancy": worst})
        if worst > Config.ISOMETRY_TOL:
            log.error(f"❌ {conformal_map.kind}: norm discrepancy {worst:.3e} above {Config.ISOMETRY_TOL:.1e}")
            return EXIT_BOUND_FAILURE
        return EXIT_OK


def setup(runner):
    runner.add_command(ConformalCommand(runner))

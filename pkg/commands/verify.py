import logging

from config import Config
from riesz.sweep import EXPLORATORY, conjecture_sweep
from runner.core import EXIT_BOUND_FAILURE, EXIT_OK, Command
from runner.output import point_columns
from runner.specs import parse_point
from utils.helpers import parse_number

log = logging.getLogger("lumer.commands.verify")


class VerifyCommand(Command):
    name = "verify"
    help = "Randomized sweep of the Riesz ratio on the disk (EXPLORATORY outside p = 2)"
    columns = (
        "row", "seed", "degree", "p", "zeta0_re", "zeta0_im",
        "norm_u", "norm_f", "ratio", "bound", "margin", "label", "note", "error",
    )

    def configure(self, parser):
        parser.add_argument("--p", type=parse_number, default=2.0, help="exponent p > 1")
        parser.add_argument("--trials", type=int, default=1000)
        parser.add_argument("--degree", type=int, default=32, help="degree of every random polynomial")
        parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
        parser.add_argument("--zeta0", type=parse_point, default=0j, help="base point 're,im' in the disk")
        parser.add_argument("--workers", type=int, default=Config.WORKERS)

    def run(self, args, writer):
        summary = conjecture_sweep(
            args.p, args.trials, args.degree, seed=args.seed,
            zeta0=args.zeta0, workers=args.workers,
        )
        base = {"seed": summary.seed, "p": summary.p, "bound": summary.bound, "label": EXPLORATORY,
                **point_columns("zeta0", summary.zeta0)}
        for row in summary.rows:
            record = {**base, "row": row.trial, "degree": row.degree, "error": row.error}
            if row.report is not None:
                report = row.report
                record.update(norm_u=report.norm_u, norm_f=report.norm_f, ratio=report.ratio, margin=report.margin)
            writer.write(record)

        failed = len(summary.errors)
        writer.write({
            **base, "row": "summary", "degree": summary.degree_cap,
            "ratio": summary.max_ratio, "margin": summary.margin,
            "note": summary.argmax, "error": f"{failed} trial(s) failed" if failed else None,
        })
        if summary.theorem_backed and not summary.within_bound():
            log.error(f"❌ p = 2 bound violated: max ratio {summary.max_ratio!r} > {summary.bound!r}")
            return EXIT_BOUND_FAILURE
        return EXIT_OK


def setup(runner):
    runner.add_command(VerifyCommand(runner))

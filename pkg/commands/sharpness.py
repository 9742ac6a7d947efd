import logging
import math

from config import Config
from riesz.engine import sharpness_family
from runner.core import EXIT_BOUND_FAILURE, EXIT_OK, Command
from utils.helpers import parse_number

log = logging.getLogger("lumer.commands.sharpness")


class SharpnessCommand(Command):
    name = "sharpness"
    help = "Equality case of the p = 2 bound: u = Re z^n at the origin"
    columns = ("n", "shift", "ratio", "gap")

    def configure(self, parser):
        parser.add_argument("--n", type=int, nargs="*", default=[], help="powers n >= 1")
        parser.add_argument("--shift", type=parse_number, default=0.0,
                            help="constant added to u; a non-zero shift breaks equality")

    def run(self, args, writer):
        status = EXIT_OK
        rows = []
        for n in args.n:
            report = sharpness_family(n, shift=args.shift)
            gap = abs(report.ratio - math.sqrt(2))
            rows.append({"n": n, "shift": args.shift, "ratio": report.ratio, "gap": gap})
            if args.shift == 0 and gap > Config.SHARPNESS_TOL:
                log.error(f"❌ n={n}: ratio {report.ratio!r} misses sqrt(2) by {gap:.3e}")
                status = EXIT_BOUND_FAILURE
        writer.write_all(rows)
        return status


def setup(runner):
    runner.add_command(SharpnessCommand(runner))

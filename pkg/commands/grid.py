import logging
import math

from config import Config
from grid.field import GridField
from riesz.engine import riesz_ratio_grid
from runner.core import EXIT_BOUND_FAILURE, EXIT_OK, Command
from runner.output import point_columns
from runner.specs import parse_domain, parse_function, parse_point
from utils.errors import ExistenceFailure
from utils.helpers import parse_number

log = logging.getLogger("lumer.commands.grid")

OK = "ok"
NO_CONJUGATE = "existence-failure"


class GridCommand(Command):
    name = "grid"
    help = "Riesz ratio on a grid domain (builtin shape or mask file)"
    default_format = "jsonl"
    columns = (
        "status", "domain", "function", "p", "zeta0_re", "zeta0_im",
        "norm_u", "norm_f", "ratio", "bound", "margin", "period", "tolerance",
    )

    def configure(self, parser):
        parser.add_argument("--domain", required=True,
                            help="builtin:disk:<R>[:<h>], builtin:annulus:<r>:<R>[:<h>], builtin:square:<L>[:<h>] or a mask file")
        parser.add_argument("--function", default="re:1", help="const:<c>, re:<n>, im:<n> or log_abs")
        parser.add_argument("--zeta0", type=parse_point, default=0j, help="base point 're,im'")
        parser.add_argument("--p", type=parse_number, default=2.0)

    def run(self, args, writer):
        domain = parse_domain(args.domain)
        u = GridField.from_function(domain, parse_function(args.function))
        record = {"domain": domain.describe(), "function": args.function, "p": args.p,
                  **point_columns("zeta0", args.zeta0)}
        try:
            report = riesz_ratio_grid(u, args.zeta0, args.p)
        except ExistenceFailure as e:
            writer.write({**record, "status": NO_CONJUGATE, "period": e.period, "tolerance": e.tolerance})
            return EXIT_OK

        writer.write({
            **record, "status": OK, "norm_u": report.norm_u, "norm_f": report.norm_f,
            "ratio": report.ratio, "bound": report.bound, "margin": report.margin,
        })
        ceiling = math.sqrt(2) * (1 + Config.GRID_BOUND_SLACK)
        if report.theorem_backed and report.ratio > ceiling:
            log.error(f"❌ grid ratio {report.ratio!r} exceeds sqrt(2) beyond the discretization slack")
            return EXIT_BOUND_FAILURE
        return EXIT_OK


def setup(runner):
    runner.add_command(GridCommand(runner))

import logging

from riesz.constants import conjugate_exponent, verbitsky_constant
from runner.core import EXIT_OK, Command
from runner.specs import parse_exponents

log = logging.getLogger("lumer.commands.constants")


class ConstantsCommand(Command):
    name = "constants"
    help = "Sharp Riesz constants c_p and their conjugate-exponent symmetry"
    columns = ("p", "c_p", "p_conjugate", "c_p_conjugate", "symmetry_gap")

    def configure(self, parser):
        parser.add_argument("--p", nargs="*", default=[], help="exponents p > 1 (fractions allowed)")

    def run(self, args, writer):
        for p in parse_exponents(args.p):
            c_p = verbitsky_constant(p)
            q = conjugate_exponent(p)
            c_q = verbitsky_constant(q)
            writer.write({"p": p, "c_p": c_p, "p_conjugate": q, "c_p_conjugate": c_q, "symmetry_gap": abs(c_p - c_q)})
        return EXIT_OK


def setup(runner):
    runner.add_command(ConstantsCommand(runner))

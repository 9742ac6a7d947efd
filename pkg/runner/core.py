import argparse
import importlib
import logging
import sys
from contextlib import contextmanager

from config import Config
from runner.output import FORMATS, TableWriter
from utils.errors import LumerError

log = logging.getLogger("lumer.runner")

EXTENSIONS = (
    "commands.constants",
    "commands.verify",
    "commands.sharpness",
    "commands.grid",
    "commands.conformal",
)

EXIT_OK = 0
EXIT_BOUND_FAILURE = 1
EXIT_INPUT_ERROR = 2


class Command:
    """Base for subcommands registered through a module-level ``setup(runner)``."""
    name = ""
    help = ""
    columns = ()
    default_format = None

    def __init__(self, runner):
        self.runner = runner

    def configure(self, parser):
        pass

    def run(self, args, writer):
        raise NotImplementedError


class LumerRunner:
    def __init__(self):
        self.config = Config
        self.commands = {}

        self.common = argparse.ArgumentParser(add_help=False)
        self.common.add_argument("--out", default=None, help="output file (default: stdout)")
        self.common.add_argument("--format", choices=FORMATS, default=None, help="table format")

        self.parser = argparse.ArgumentParser(
            prog="lumer",
            description="Lumer norms, harmonic conjugates and the sqrt(2) Riesz bound, checked numerically.",
        )
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)

    def load_extension(self, name):
        module = importlib.import_module(name)
        module.setup(self)

    def add_command(self, command):
        epilog = f"columns: {', '.join(command.columns)}" if command.columns else None
        parser = self.subparsers.add_parser(
            command.name, help=command.help, description=command.help,
            epilog=epilog, parents=[self.common],
        )
        command.configure(parser)
        parser.set_defaults(command_object=command)
        self.commands[command.name] = command

    def setup(self):
        for extension in EXTENSIONS:
            self.load_extension(extension)
        log.debug(f"Loaded commands: {', '.join(self.commands)}")

    @contextmanager
    def _open(self, path):
        if path is None:
            yield sys.stdout
            return
        with open(path, "w", encoding="utf-8", newline="") as stream:
            yield stream

    def run(self, argv=None):
        """Parse argv, run the chosen command and return its exit status"""
        if not self.commands:
            self.setup()
        args = self.parser.parse_args(argv)
        command = args.command_object
        fmt = args.format or command.default_format or self.config.OUTPUT_FORMAT
        try:
            with self._open(args.out) as stream:
                writer = TableWriter(stream, command.columns, fmt)
                status = command.run(args, writer)
        except LumerError as e:
            log.error(f"❌ {command.name}: {e}")
            return EXIT_INPUT_ERROR
        except OSError as e:
            log.error(f"❌ {command.name}: cannot write output: {e}")
            return EXIT_INPUT_ERROR
        if status == EXIT_OK:
            log.info(f"✅ {command.name}: {writer.count} row(s) written")
        else:
            log.warning(f"⚠️ {command.name}: bound check failed (exit status {status})")
        return status


def main(argv=None):
    return LumerRunner().run(argv)

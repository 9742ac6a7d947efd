from runner.core import EXIT_BOUND_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, Command, LumerRunner, main
from runner.output import TableWriter

__all__ = [
    "EXIT_BOUND_FAILURE",
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "Command",
    "LumerRunner",
    "TableWriter",
    "main",
]

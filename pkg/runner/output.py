"""Table writers with a fixed column order (CSV or JSON lines)."""

import csv
import json
import logging

from utils.errors import InvalidParameter
from utils.helpers import format_float

log = logging.getLogger("lumer.runner")

FORMATS = ("csv", "jsonl")


def _cell(value):
    if isinstance(value, float):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def _json_value(value):
    # floats stay numbers; 17 significant digits round-trip exactly
    if isinstance(value, float):
        return float(format_float(value))
    return value


class TableWriter:
    """Writes rows as dicts keyed by ``columns``; missing keys are blank."""

    def __init__(self, stream, columns, fmt="csv"):
        if fmt not in FORMATS:
            raise InvalidParameter(f"unknown output format {fmt!r}; expected one of {FORMATS}")
        self.stream = stream
        self.columns = tuple(columns)
        self.format = fmt
        self.count = 0
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(self.columns)

    def write(self, row):
        unknown = set(row) - set(self.columns)
        if unknown:
            raise InvalidParameter(f"row has columns outside the table: {sorted(unknown)}")
        if self.format == "csv":
            self._csv.writerow([_cell(row.get(column)) for column in self.columns])
        else:
            record = {column: _json_value(row.get(column)) for column in self.columns}
            self.stream.write(json.dumps(record) + "\n")
        self.count += 1

    def write_all(self, rows):
        for row in rows:
            self.write(row)


def point_columns(prefix, value):
    """{prefix_re: ..., prefix_im: ...} for a complex point"""
    value = complex(value)
    return {f"{prefix}_re": value.real, f"{prefix}_im": value.imag}

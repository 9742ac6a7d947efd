import csv
import io
import json
import math

import pytest

from runner import EXIT_INPUT_ERROR, EXIT_OK, main
from utils.helpers import format_float


def run_csv(capsys, *argv):
    status = main(list(argv))
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    return status, rows


def run_jsonl(capsys, *argv):
    status = main(list(argv))
    lines = capsys.readouterr().out.splitlines()
    return status, [json.loads(line) for line in lines]


# -- constants ------------------------------------------------------------------------

def test_constants_table(capsys):
    status, rows = run_csv(capsys, "constants", "--p", "2", "3/2", "4")
    assert status == EXIT_OK
    assert [row["p"] for row in rows] == ["2", "1.5", "4"]
    assert float(rows[0]["c_p"]) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert float(rows[1]["c_p"]) == pytest.approx(2.0, abs=1e-15)
    assert float(rows[1]["p_conjugate"]) == pytest.approx(3.0, abs=1e-15)
    assert all(float(row["symmetry_gap"]) <= 1e-12 for row in rows)


def test_constants_without_exponents_prints_the_header(capsys):
    status = main(["constants"])
    assert status == EXIT_OK
    assert capsys.readouterr().out == "p,c_p,p_conjugate,c_p_conjugate,symmetry_gap\n"


def test_constants_reject_bad_exponents(capsys):
    assert main(["constants", "--p", "1"]) == EXIT_INPUT_ERROR
    assert main(["constants", "--p", "two"]) == EXIT_INPUT_ERROR


# -- verify -----------------------------------------------------------------------------

def test_verify_sweep(capsys):
    status, rows = run_csv(capsys, "verify", "--p", "2", "--trials", "50", "--degree", "8", "--seed", "1")
    assert status == EXIT_OK
    assert len(rows) == 51
    summary = rows[-1]
    assert summary["row"] == "summary"
    assert float(summary["ratio"]) <= math.sqrt(2) + 1e-9
    assert float(summary["margin"]) >= -1e-9
    assert summary["label"] == "EXPLORATORY"
    assert summary["error"] == ""


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--trials", "20", "--degree", "6", "--seed", "99", "--format", "jsonl")
    _, first = run_jsonl(capsys, *argv)
    _, second = run_jsonl(capsys, *argv, "--workers", "3")
    assert first == second


def test_verify_off_the_origin(capsys):
    status, rows = run_jsonl(capsys, "verify", "--trials", "10", "--degree", "5", "--zeta0=-0.3,0.2", "--format", "jsonl")
    assert status == EXIT_OK
    assert rows[0]["zeta0_re"] == -0.3 and rows[0]["zeta0_im"] == 0.2


def test_verify_rejects_bad_trials(capsys):
    assert main(["verify", "--trials", "0"]) == EXIT_INPUT_ERROR


# -- sharpness ----------------------------------------------------------------------------

def test_sharpness_family_rows(capsys):
    status, rows = run_csv(capsys, "sharpness", "--n", "1", "2", "3", "4", "5", "6", "7", "8")
    assert status == EXIT_OK
    assert len(rows) == 8
    assert all(float(row["gap"]) <= 1e-12 for row in rows)


def test_shifted_sharpness_rows(capsys):
    status, rows = run_csv(capsys, "sharpness", "--n", "1", "--shift", "1")
    assert status == EXIT_OK
    assert float(rows[0]["ratio"]) < math.sqrt(2) - 1e-3


def test_sharpness_rejects_zero_power(capsys):
    assert main(["sharpness", "--n", "0"]) == EXIT_INPUT_ERROR


# -- grid --------------------------------------------------------------------------------

def test_grid_constant_on_the_square(capsys):
    status, rows = run_jsonl(capsys, "grid", "--domain", "builtin:square:2:1/16", "--function", "const:5",
                             "--zeta0", "0.3,0.1")
    assert status == EXIT_OK
    assert rows[0]["status"] == "ok"
    assert rows[0]["ratio"] == pytest.approx(1.0, abs=1e-10)


def test_grid_disk_ratio(capsys):
    status, rows = run_jsonl(capsys, "grid", "--domain", "builtin:disk:1", "--function", "re:1")
    assert status == EXIT_OK
    assert rows[0]["ratio"] == pytest.approx(math.sqrt(2), rel=0.01)
    assert rows[0]["bound"] == pytest.approx(math.sqrt(2), abs=1e-15)


def test_grid_reports_missing_conjugate(capsys):
    status, rows = run_jsonl(capsys, "grid", "--domain", "builtin:annulus:0.5:1.5:1/32",
                             "--function", "log_abs", "--zeta0", "1,0")
    assert status == EXIT_OK
    assert rows[0]["status"] == "existence-failure"
    assert rows[0]["period"] == pytest.approx(2 * math.pi, rel=0.02)
    assert rows[0]["ratio"] is None


def test_grid_csv_output(capsys):
    status, rows = run_csv(capsys, "grid", "--domain", "builtin:square:2:1/8", "--function", "re:2", "--format", "csv")
    assert status == EXIT_OK
    assert rows[0]["status"] == "ok"


def test_grid_mask_file(capsys, tmp_path):
    path = tmp_path / "plus.mask"
    path.write_text("h=0.25 x0=-1 y0=-0.5\n01110\n11111\n11111\n01110\n")
    status, rows = run_jsonl(capsys, "grid", "--domain", str(path), "--function", "const:2", "--zeta0=-0.5,0")
    assert status == EXIT_OK
    assert rows[0]["domain"].startswith("plus.mask")
    assert rows[0]["ratio"] == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("argv", [
    ["grid", "--domain", "builtin:hexagon:1"],
    ["grid", "--domain", "builtin:disk"],
    ["grid", "--domain", "builtin:annulus:1.5:0.5"],
    ["grid", "--domain", "builtin:disk:1", "--function", "sin:2"],
    ["grid", "--domain", "builtin:disk:1", "--zeta0", "2,0"],
    ["grid", "--domain", "no/such/file.mask"],
])
def test_grid_rejects_bad_specs(capsys, argv):
    assert main(argv) == EXIT_INPUT_ERROR


# -- conformal -------------------------------------------------------------------------------

def test_conformal_rotation(capsys):
    status, rows = run_csv(capsys, "conformal", "--map", '{"kind": "rotation", "phi": 0.7}',
                           "--trials", "5", "--degree", "4", "--samples", "256")
    assert status == EXIT_OK
    assert len(rows) == 6
    assert rows[-1]["row"] == "summary"
    assert float(rows[-1]["discrepancy"]) <= 1e-7


def test_conformal_mobius(capsys):
    status, rows = run_jsonl(capsys, "conformal", "--map", '{"kind": "mobius", "a": [0.3, 0.1]}',
                             "--trials", "3", "--zeta0", "0.2,0", "--format", "jsonl")
    assert status == EXIT_OK
    assert all(row["discrepancy"] <= 1e-7 for row in rows)


@pytest.mark.parametrize("spec", ['{"kind": "mobius", "a": 1.2}', "not json", '{"kind": "cayley"}'])
def test_conformal_rejects_bad_maps(capsys, spec):
    assert main(["conformal", "--map", spec, "--trials", "1"]) == EXIT_INPUT_ERROR


# -- plumbing -----------------------------------------------------------------------------------

def test_output_file(capsys, tmp_path):
    out = tmp_path / "constants.csv"
    assert main(["constants", "--p", "2", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    lines = out.read_text().splitlines()
    assert lines[0].startswith("p,c_p")
    assert len(lines) == 2


def test_unwritable_output(tmp_path):
    assert main(["constants", "--p", "2", "--out", str(tmp_path / "missing" / "x.csv")]) == EXIT_INPUT_ERROR


def test_argument_errors_exit_with_two():
    with pytest.raises(SystemExit) as info:
        main(["grid", "--domain", "builtin:disk:1", "--p", "abc"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_negative_zero_is_written_as_zero(capsys):
    status, rows = run_csv(capsys, "conformal", "--map", '{"kind": "mobius", "a": 0.3}',
                           "--trials", "1", "--degree", "2", "--zeta0", "0.2,0")
    assert status == EXIT_OK
    assert rows[0]["zeta0_im"] == "0"
    assert all(value != "-0" for row in rows for value in row.values())
    assert format_float(-0.0) == "0"

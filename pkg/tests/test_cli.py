import csv
import io
import json
import subprocess
import sys

import pytest

from prodnormal import cli, exact
from prodnormal.params import DistParams

BASE = ["--mu-x", "1", "--mu-y", "-1", "--rho", "-0.5", "--n", "1"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pdf_exact_series(capsys):
    code, out, _ = run(capsys, "pdf", *BASE, "--x", "2.5", "--mode", "exact-series", "--output", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["value"] > 0
    assert rec["value"] == exact.pdf_series(DistParams(1, -1, 1, 1, -0.5, 1), 2.5)


def test_json_round_trip_is_bit_exact(capsys):
    _, out, _ = run(capsys, "quantile", *BASE, "--p", "0.95", "--output", "json")
    val = json.loads(out)["value"]
    assert val == exact.quantile_numeric(DistParams(1, -1, 1, 1, -0.5, 1), 0.95)


def test_csv_output_17_digits(capsys):
    _, out, _ = run(capsys, "tail", *BASE, "--x", "1.5", "--output", "csv")
    rec = next(csv.DictReader(io.StringIO(out)))
    assert float(rec["value"]) == exact.tail(DistParams(1, -1, 1, 1, -0.5, 1), 1.5)
    assert len(rec["value"].replace("-", "").replace(".", "").split("e")[0]) >= 16


def test_upper_tail_domain_error(capsys):
    code, out, err = run(capsys, "tail", *BASE, "--mode", "asym", "--order", "2", "--x", "-1")
    assert code != 0 and out == ""
    assert json.loads(err)["category"] == "domain-error"


def test_lower_side_asym(capsys):
    code, out, _ = run(capsys, "tail", *BASE, "--mode", "asym", "--side", "lower", "--x", "-6",
                       "--output", "json")
    assert code == 0 and 0 < json.loads(out)["value"] < 1


def test_quantile_asym_reports_validity(capsys):
    _, out, _ = run(capsys, "quantile", *BASE, "--p", "0.6", "--mode", "asym", "--output", "json")
    assert json.loads(out)["valid"] is False


def test_regime_and_parameter_errors(capsys):
    code, _, err = run(capsys, "pdf", "--mu-x", "1", "--mu-y", "1", "--rho", "1.5", "--x", "1")
    assert code == 1 and json.loads(err)["category"] == "parameter-error"
    code, _, err = run(capsys, "quantile", *BASE, "--p", "1.5")
    assert code == 1 and json.loads(err)["category"] == "domain-error"


def test_unknown_flag_rejected(capsys):
    code, out, err = run(capsys, "pdf", *BASE, "--x", "1", "--colour", "red")
    assert code == 2 and out == ""
    assert json.loads(err)["category"] == "usage-error"


def test_mode_not_allowed_for_subcommand(capsys):
    code, _, err = run(capsys, "tail", *BASE, "--x", "1", "--mode", "exact-series")
    assert code == 2 and json.loads(err)["category"] == "usage-error"


def test_help_lists_flags(capsys):
    with pytest.raises(SystemExit):
        cli.main(["tail", "--help"])
    text = capsys.readouterr().out
    for flag in ("--mu-x", "--mu-y", "--sigma-x", "--sigma-y", "--rho", "--n", "--x", "--mode", "--order",
                 "--side", "--variant", "--n-samples", "--seed", "--substream", "--output", "--out", "--config"):
        assert flag in text


def test_seed_from_environment(capsys, monkeypatch):
    args = ("sample", *BASE, "--size", "4", "--output", "json")
    monkeypatch.setenv(cli.SEED_ENV, "77")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--seed", "77")
    monkeypatch.setenv(cli.SEED_ENV, "78")
    _, c, _ = run(capsys, *args)
    assert a == b != c
    monkeypatch.setenv(cli.SEED_ENV, "x")
    code, _, err = run(capsys, *args)
    assert code == 2 and json.loads(err)["category"] == "usage-error"


def test_mc_mode(capsys):
    code, out, _ = run(capsys, "tail", *BASE, "--x", "0.4", "--mode", "mc", "--n-samples", "20000",
                       "--output", "json")
    rec = json.loads(out)
    assert code == 0 and rec["std_error"] > 0
    assert abs(rec["value"] - exact.tail(DistParams(1, -1, 1, 1, -0.5, 1), 0.4)) < 5 * rec["std_error"]


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"eval": {"series_k_max": 80}, "special": {"max_terms": 2000}}))
    code, out, _ = run(capsys, "pdf", *BASE, "--x", "2.5", "--config", str(cfg), "--output", "json")
    assert code == 0 and json.loads(out)["value"] > 0
    cfg.write_text(json.dumps({"eval": {"nope": 1}}))
    code, _, err = run(capsys, "pdf", *BASE, "--x", "2.5", "--config", str(cfg))
    assert code == 2 and json.loads(err)["category"] == "usage-error"


def test_table_csv_to_file(capsys, tmp_path):
    path = tmp_path / "t1.csv"
    code, out, _ = run(capsys, "table", "--id", "1", "--output", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 162 and rows[0]["table_id"] == "1"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "prodnormal.cli", "pdf", *BASE, "--x", "2.5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "value:" in proc.stdout

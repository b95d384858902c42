import csv
import json
import math

import pytest

from lerchzeta import cli
from lerchzeta.errors import DomainError


def test_format_value_fixed_style():
    assert cli.format_value(1.6449340668482264 + 0j) == "1.64493406684823+0.00000000000000i"
    assert cli.format_value(complex(0.0, -0.5)) == "0.00000000000000-0.500000000000000i"


def test_format_value_switches_to_exponent():
    out = cli.format_value(complex(1e16, -2.5e-6))
    assert out == "1.00000000000000e+16-2.50000000000000e-06i"


@pytest.mark.parametrize("text,want", [
    ("0.2+0.6i", 0.2 + 0.6j),
    ("2", 2.0 + 0.0j),
    ("-0.5", -0.5 + 0.0j),
    ("2.5e-3-1e-2i", 0.0025 - 0.01j),
    ("1+2I", 1.0 + 2.0j),
    ("0.7i", 0.7j),
])
def test_parse_complex(text, want):
    assert cli.parse_complex(text) == want


@pytest.mark.parametrize("text", ["foo", "1+2", "1++2i", ""])
def test_parse_complex_rejects(text):
    with pytest.raises(DomainError):
        cli.parse_complex(text)


@pytest.mark.parametrize("z", [1.25 - 0.75j, 3.0e-7 + 1.0e12j, -0.1 + 0.0j])
def test_format_parse_round_trip(z):
    back = cli.parse_complex(cli.format_value(z))
    assert abs(back - z) <= 1e-13 * max(abs(z), 1.0)


def _run(capsys, argv):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_eval_ray_route(capsys):
    rc, out, _ = _run(capsys, ["eval", "--method", "theorem1",
                               "--t", "0.2+0.6i", "--x", "0.7-0.4i", "--s", "2.5"])
    assert rc == 0
    lines = out.strip().splitlines()
    # mpmath, 40 digits
    want = 0.46032314728431114067 + 1.6555096312897203311j
    assert abs(cli.parse_complex(lines[0]) - want) <= 1e-9 * abs(want)
    assert lines[1].startswith("error estimate ")


def test_eval_methods_cross_agree(capsys):
    argv = ["eval", "--t", "0.2+0.6i", "--x", "0.7-0.4i", "--s", "2.5"]
    rc1, out1, _ = _run(capsys, argv + ["--method", "series"])
    rc2, out2, _ = _run(capsys, argv + ["--method", "theorem1"])
    assert rc1 == rc2 == 0
    v1 = cli.parse_complex(out1.splitlines()[0])
    v2 = cli.parse_complex(out2.splitlines()[0])
    assert abs(v1 - v2) <= 1e-9 * abs(v1)


def test_eval_reflected_route_reports_unreflected_exponent(capsys):
    # --s is the exponent of the reported value, for every method
    rc, out, _ = _run(capsys, ["eval", "--method", "theorem2",
                               "--t", "0.3+0.4i", "--x", "0.25", "--s", "1.5"])
    assert rc == 0
    want = 7.9805909413527594244 + 0.053932545482375578732j  # mpmath, 40 digits
    assert abs(cli.parse_complex(out.splitlines()[0]) - want) <= 1e-5 * abs(want)


def test_eval_halfpoint(capsys):
    rc, out, _ = _run(capsys, ["eval", "--method", "riemann-halfpoint", "--s", "2"])
    assert rc == 0
    got = cli.parse_complex(out.splitlines()[0])
    assert abs(got - math.pi ** 2 / 6.0) <= 1e-6


def test_eval_hurwitz(capsys):
    rc, out, _ = _run(capsys, ["eval", "--method", "hurwitz",
                               "--x", "2.5", "--s", "3.2"])
    assert rc == 0
    want = 0.092587845315324132217  # mpmath zeta(3.2, 2.5), 40 digits
    assert abs(cli.parse_complex(out.splitlines()[0]) - want) <= 1e-11


def test_eval_domain_error_exit_2(capsys):
    rc, _, err = _run(capsys, ["eval", "--method", "riemann-limit", "--s", "1"])
    assert rc == 2
    assert "Re(s) > 1" in err
    rc, _, _ = _run(capsys, ["eval", "--method", "series",
                             "--t", "bogus", "--x", "1", "--s", "2"])
    assert rc == 2
    rc, _, _ = _run(capsys, ["eval", "--method", "hurwitz",
                             "--t", "0.5", "--x", "1", "--s", "2"])
    assert rc == 2


def test_eval_unreachable_accuracy_exit_3(capsys, monkeypatch):
    monkeypatch.delenv(cli.TOL_ENV, raising=False)
    argv = ["eval", "--method", "series", "--t", "0", "--x", "1", "--s", "2"]
    rc, _, err = _run(capsys, argv)
    assert rc == 3
    assert err.startswith("error: ")
    rc, out, _ = _run(capsys, argv + ["--tol", "2e-7"])
    assert rc == 0
    got = cli.parse_complex(out.splitlines()[0])
    assert abs(got - math.pi ** 2 / 6.0) <= 1e-6


def test_eval_tol_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.TOL_ENV, "2e-7")
    rc, _, _ = _run(capsys, ["eval", "--method", "series",
                             "--t", "0", "--x", "1", "--s", "2"])
    assert rc == 0
    monkeypatch.setenv(cli.TOL_ENV, "abc")
    rc, _, _ = _run(capsys, ["eval", "--method", "series",
                             "--t", "0", "--x", "1", "--s", "2"])
    assert rc == 2


def test_verify_report(capsys, tmp_path):
    out_path = tmp_path / "report.jsonl"
    rc, out, _ = _run(capsys, ["verify", "--suite", "lemmas",
                               "--grid-seed", "3", "--output", str(out_path)])
    assert rc == 0
    assert out.strip() == f"70 pass, 0 fail, 0 skipped -> {out_path}"
    lines = out_path.read_text().splitlines()
    header = json.loads(lines[0])
    assert header["format"] == "lerchzeta-verify-v1"
    assert header["suites"] == ["lemmas"]
    assert header["grid_seed"] == 3
    assert "lemmas" in header["tolerances"]
    records = [json.loads(line) for line in lines[1:]]
    assert len(records) == 70
    assert all(rec["status"] == "pass" for rec in records)
    assert all(rec["rel_residual"] <= rec["tolerance"] for rec in records)


def test_verify_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        rc, _, _ = _run(capsys, ["verify", "--suite", "lemmas",
                                 "--grid-seed", "3", "--output", str(path)])
        assert rc == 0
    assert a.read_bytes() == b.read_bytes()


def _write_sweep(tmp_path, spec):
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(spec))
    return path


def test_table_csv_and_jsonl_agree(capsys, tmp_path):
    spec = _write_sweep(tmp_path, {
        "t": {"fixed": "0.2+0.6i"},
        "x": {"fixed": "0.7-0.4i"},
        "s": {"component": "re", "start": 1.5, "stop": 3.5, "count": 5,
              "fixed": 0.0},
        "methods": ["series", "theorem1"],
    })
    out_csv = tmp_path / "out.csv"
    out_jsonl = tmp_path / "out.jsonl"
    rc, _, _ = _run(capsys, ["table", str(spec), "--output", str(out_csv)])
    assert rc == 0
    rc, _, _ = _run(capsys, ["table", str(spec), "--output", str(out_jsonl),
                             "--format", "json-lines"])
    assert rc == 0

    with open(out_csv, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(cli.TABLE_COLUMNS)
    body = rows[1:]
    assert len(body) == 10
    assert all(row[11] == "ok" for row in body)
    # the two routes sweep the same points; their values must agree
    for k in range(0, 10, 2):
        v_series = complex(float(body[k][7]), float(body[k][8]))
        v_ray = complex(float(body[k + 1][7]), float(body[k + 1][8]))
        assert abs(v_series - v_ray) <= 1e-8 * abs(v_series)

    jrows = [json.loads(line) for line in out_jsonl.read_text().splitlines()]
    assert len(jrows) == 10
    for row, jrow in zip(body, jrows):
        # everything except the timing column must match exactly
        assert float(row[7]) == jrow["val_re"]
        assert float(row[8]) == jrow["val_im"]
        assert row[6] == jrow["method"]
        assert row[11] == jrow["status"]


def test_table_skips_out_of_domain_rows(capsys, tmp_path):
    spec = _write_sweep(tmp_path, {
        "t": {"fixed": "0.3+0.5i"},
        "x": {"fixed": -2.0},
        "s": {"fixed": 2.0},
        "methods": ["series"],
    })
    out_csv = tmp_path / "out.csv"
    rc, _, _ = _run(capsys, ["table", str(spec), "--output", str(out_csv)])
    assert rc == 0
    with open(out_csv, newline="") as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 2
    assert rows[1][11].startswith("skipped: ")
    assert rows[1][7] == ""


def test_table_tol_priority(capsys, tmp_path):
    spec = _write_sweep(tmp_path, {
        "t": {"fixed": 0.0},
        "x": {"fixed": 1.0},
        "s": {"fixed": 2.0},
        "methods": ["series"],
        "tol": 1e-4,
    })
    out_csv = tmp_path / "out.csv"
    rc, _, _ = _run(capsys, ["table", str(spec), "--output", str(out_csv)])
    assert rc == 0
    with open(out_csv, newline="") as fh:
        err_spec = float(list(csv.reader(fh))[1][9])
    assert 2e-6 < err_spec <= 1e-4

    rc, _, _ = _run(capsys, ["table", str(spec), "--output", str(out_csv),
                             "--tol", "2e-7"])
    assert rc == 0
    with open(out_csv, newline="") as fh:
        err_flag = float(list(csv.reader(fh))[1][9])
    assert err_flag <= 2e-7


def test_table_rejects_bad_spec(capsys, tmp_path):
    spec = _write_sweep(tmp_path, {"t": {"fixed": 0.0}, "methods": []})
    rc, _, err = _run(capsys, ["table", str(spec),
                               "--output", str(tmp_path / "out.csv")])
    assert rc == 2
    assert "methods" in err

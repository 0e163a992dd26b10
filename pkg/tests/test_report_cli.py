import csv
import io
import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline import constants as C
from zetaline.cli import Lcg64, main, run, sample_omegas
from zetaline.report import CSV_COLUMNS, ReportBundle, RunConfig, fmt_complex, from_json, serialize, to_json
from zetaline.results import VerificationRecord


def rec(i=0, lhs=1.0, rhs=1.0, tol=1e-9):
    return VerificationRecord(f"r{i}", lhs, rhs, tol, "ref")


def test_empty_bundle_json():
    doc = json.loads(serialize(ReportBundle([], {}), "json"))
    assert doc["summary"] == {"total": 0, "passed": 0, "failed": 0}
    assert set(doc) >= {"version", "config", "summary", "records"}


def test_one_passing_record_json():
    doc = json.loads(serialize(ReportBundle([rec(lhs=1.0, rhs=1.0 + 1e-12)], {}), "json"))
    r = doc["records"][0]
    assert r["pass"] is True and r["abs_diff"] <= r["tol"]
    assert list(r) == ["id", "lhs", "rhs", "abs_diff", "tol", "pass", "paper_ref"]
    assert set(r["lhs"]) == {"re", "im"}


finite = st.floats(-1e150, 1e150, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(finite, finite, finite, finite, st.floats(0, 1)), max_size=8))
def test_json_round_trip(items):
    records = [VerificationRecord(f"id{i}", complex(a, b), complex(c, d), t, "ref") for i, (a, b, c, d, t) in enumerate(items)]
    bundle = ReportBundle(records, {"command": "x", "tol": 1e-9})
    back = from_json(to_json(bundle))
    assert back.records == bundle.records or all(
        (x.id, x.lhs, x.rhs, x.tol, x.paper_ref) == (y.id, y.lhs, y.rhs, y.tol, y.paper_ref)
        and (x.abs_diff == y.abs_diff or (math.isinf(x.abs_diff) and math.isinf(y.abs_diff)))
        for x, y in zip(back.records, bundle.records)
    )
    assert back.summary == bundle.summary
    assert back.config == bundle.config


def test_csv_columns():
    text = serialize(ReportBundle([rec(), rec(1, 1.0, 2.0)], {}), "csv").decode()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_COLUMNS
    assert rows[1][7] == "true" and rows[2][7] == "false"


def test_text_format():
    assert fmt_complex(1 / 3 + 2j / 3) == "0.333333333333+0.666666666667i"
    out = serialize(ReportBundle([rec(), rec(1, 1.0, 2.0)], {}), "text").decode()
    assert "PASS" in out and "FAIL" in out and "failed 1" in out


def test_lcg_reference_values():
    g = Lcg64(42)
    assert g.next_u64() == (42 * 6364136223846793005 + 1442695040888963407) % 2**64
    ws = sample_omegas(42, 20)
    assert len(ws) == 20
    assert all(-0.4 <= w.real < 3 and -2 <= w.imag < 2 for w in ws)
    assert ws == sample_omegas(42, 20)
    assert ws != sample_omegas(43, 20)


def test_run_constants():
    b = run(RunConfig(command="constants"))
    assert [r["name"] for r in b.results][:2] == ["euler_gamma", "glaisher_A"]
    assert b.exit_code == 0


def test_run_nu_zero_all_methods():
    b = run(RunConfig(command="nu", omega=0j, tol=1e-9))
    assert len(b.results) == 3
    for r in b.results:
        assert abs(complex(r["value"]["re"], r["value"]["im"]) - C.EULER_GAMMA) <= 1e-9
    assert b.exit_code == 0


def test_run_verify_corollary():
    b = run(RunConfig(command="verify-corollary", tol=1e-7))
    assert b.summary["failed"] == 0
    assert [r.id for r in b.records][:5] == [f"corollary_{i}" for i in range(1, 6)]


def test_run_verify_proof_smallest():
    b = run(RunConfig(command="verify-proof", r_max=1))
    assert [r.id for r in b.records] == ["sin_sandwich_R1", "i_r_reference_R1"]
    assert b.exit_code == 0


def test_main_nu_text(capsys):
    assert main(["nu", "--omega", "1,0", "--method", "series"]) == 0
    assert "series" in capsys.readouterr().out


def test_main_zeta(capsys):
    assert main(["zeta", "--s", "2,0", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"][0]["value"]["re"] == pytest.approx(math.pi**2 / 6, abs=1e-12)


def test_main_verify_aliases(capsys):
    assert main(["verify", "corollary", "--format", "json"]) == 0
    a = capsys.readouterr().out
    assert main(["verify-corollary", "--format", "json"]) == 0
    b = capsys.readouterr().out
    assert a == b


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["nu"])
    assert exc.value.code == 2


def test_unwritable_output_exit_3(tmp_path):
    target = tmp_path / "missing" / "out.json"
    assert main(["constants", "--format", "json", "--output", str(target)]) == 3


def test_output_file(tmp_path):
    target = tmp_path / "out.csv"
    assert main(["verify-corollary", "--format", "csv", "--output", str(target)]) == 0
    assert target.read_text().startswith(",".join(CSV_COLUMNS))


def test_env_tolerance(monkeypatch):
    # corollary records are good to ~1e-15, so only a sub-eps tolerance forces a failure
    monkeypatch.setenv("ZETALINE_TOL", "1e-16")
    assert main(["verify-corollary", "--format", "json", "-o", "/dev/null"]) == 1
    monkeypatch.delenv("ZETALINE_TOL")
    assert main(["verify-corollary", "--format", "json", "-o", "/dev/null"]) == 0


def test_timestamp_only_on_request():
    assert "timestamp" not in json.loads(to_json(run(RunConfig(command="constants"))))
    assert "timestamp" in json.loads(to_json(run(RunConfig(command="constants", timestamp=True))))


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "zetaline", "constants"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "kappa1" in out.stdout

import json
import subprocess
import sys

import pytest

from supercong import cli
from supercong.cli import PARALLEL_ENV, RunConfig, emit_report, run
from supercong.congruence_suite import VerificationReport
from supercong.exact_core import INFINITE

THEOREM_ARGS = ["verify", "theorem", "--c", "1", "--d", "4", "--s", "3", "--p", "7", "--r", "1"]
THEOREM_LINE = (
    b'{"claim": "theorem", "observed_valuation": 4, "params":'
    b' {"c": 1, "d": 4, "p": 7, "r": 1, "s": 3}, "pass": true, "required_exponent": 4}\n'
)


def sample_reports():
    ok = VerificationReport("theorem", (("p", 7), ("r", 1)), 4, 4, True)
    skip = VerificationReport(
        "corollary", (("p", 13), ("r", 1)), skipped_reason="p=13 is not 3 mod 4"
    )
    info = VerificationReport("conjecture-probe", (("p", 13), ("r", 1)), 6, 6, None, None, True)
    exact = VerificationReport("table1", (("row", "01"),), 1, INFINITE, True)
    return [ok, skip, info, exact]


def test_verify_theorem_stdout_and_exit_code(capfdbinary):
    assert run(THEOREM_ARGS) == 0
    out, err = capfdbinary.readouterr()
    assert out == THEOREM_LINE
    assert err == b""


def test_skipped_claim_exits_zero(capfdbinary):
    args = ["verify", "theorem", "--c", "1", "--d", "4", "--s", "3", "--p", "13", "--r", "1"]
    assert run(args) == 0
    out, _ = capfdbinary.readouterr()
    obj = json.loads(out)
    assert set(obj) == {"claim", "params", "skipped_reason"}
    assert obj["skipped_reason"] == "p=13 is not congruent to 3 mod 4"


def test_usage_errors_exit_two(capfdbinary):
    # composite p trips the operation contract, not argparse
    assert run(["verify", "theorem", "--c", "1", "--d", "4", "--s", "3", "--p", "9", "--r", "1"]) == 2
    _, err = capfdbinary.readouterr()
    assert err.startswith(b"error:")

    assert run(["no-such-command"]) == 2
    capfdbinary.readouterr()

    # malformed rational is rejected by the argument parser
    assert run(["verify", "family", "--name", "PTW_1_4", "--p", "7", "--r", "1", "--alpha", "2/0"]) == 2
    capfdbinary.readouterr()

    assert run(["verify", "family", "--name", "GZ_1_5", "--p", "5", "--r", "1", "--alpha", "1/4"]) == 2
    _, err = capfdbinary.readouterr()
    assert b"takes no alpha" in err

    assert run(["verify", "theorem", "--c", "1", "--d", "4", "--s", "3", "--p", "7", "--r", "0"]) == 2
    capfdbinary.readouterr()


def test_failing_claim_exits_one(monkeypatch, capfdbinary):
    failing = VerificationReport("theorem", (("p", 7), ("r", 1)), 4, 3, False)
    monkeypatch.setattr(cli, "verify_theorem", lambda *a, **k: failing)
    assert run(THEOREM_ARGS) == 1
    out, _ = capfdbinary.readouterr()
    assert json.loads(out)["pass"] is False


def test_table1_serializes_infinite_observations(capfdbinary):
    assert run(["table1"]) == 0
    out, _ = capfdbinary.readouterr()
    lines = out.decode().splitlines()
    assert len(lines) == 26
    for line in lines:
        obj = json.loads(line)
        assert obj["observed_valuation"] == "inf"
        assert obj["pass"] is True


def test_probe_is_informational(capfdbinary):
    assert run(["probe", "--p", "13", "--r", "1"]) == 0
    out, _ = capfdbinary.readouterr()
    obj = json.loads(out)
    assert obj["informational"] is True
    assert "pass" not in obj
    assert obj["observed_valuation"] == 6
    assert obj["required_exponent"] == 6


def test_emit_report_rejects_empty_and_unknown_format():
    with pytest.raises(ValueError, match="no reports"):
        emit_report([])
    with pytest.raises(ValueError, match="unknown format"):
        emit_report(sample_reports(), "xml")


def test_emit_report_json_shapes():
    lines = emit_report(sample_reports()).decode().splitlines()
    objs = [json.loads(line) for line in lines]
    # canonical order regardless of input order
    assert [obj["claim"] for obj in objs] == ["conjecture-probe", "corollary", "table1", "theorem"]
    by_claim = {obj["claim"]: obj for obj in objs}
    assert set(by_claim["theorem"]) == {
        "claim", "params", "pass", "required_exponent", "observed_valuation"
    }
    assert set(by_claim["corollary"]) == {"claim", "params", "skipped_reason"}
    assert set(by_claim["conjecture-probe"]) == {
        "claim", "params", "informational", "required_exponent", "observed_valuation"
    }
    assert by_claim["table1"]["observed_valuation"] == "inf"


def test_emit_report_timings_are_opt_in():
    plain = emit_report(sample_reports()).decode()
    assert "elapsed_ms" not in plain
    timed = emit_report(sample_reports(), include_timings=True).decode()
    assert all("elapsed_ms" in line for line in timed.splitlines())
    header = emit_report(sample_reports(), "tsv", include_timings=True).decode().splitlines()[0]
    assert header.split("\t")[-1] == "elapsed_ms"


def test_emit_report_tsv():
    lines = emit_report(sample_reports(), "tsv").decode().splitlines()
    assert lines[0].split("\t") == [
        "claim", "params", "required_exponent", "observed_valuation",
        "pass", "skipped_reason", "informational",
    ]
    rows = {line.split("\t")[0]: line.split("\t") for line in lines[1:]}
    assert rows["corollary"][2:] == ["-", "-", "-", "p=13 is not 3 mod 4", "-"]
    assert rows["table1"][3] == "inf"
    assert rows["theorem"][4] == "true"
    assert rows["conjecture-probe"][6] == "true"


def test_emit_report_text_summary():
    lines = emit_report(sample_reports(), "text").decode().splitlines()
    assert lines[0].startswith("INFO conjecture-probe (p=13,r=1): observed v=6")
    assert lines[1].startswith("SKIP corollary (p=13,r=1):")
    assert lines[2].startswith("PASS table1 (row=01): v=inf >= 1")
    assert lines[3].startswith("PASS theorem (p=7,r=1): v=4 >= 4")
    assert lines[4] == "2 passed, 0 failed, 1 skipped, 1 informational"


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("batch", output_format="xml")
    with pytest.raises(ValueError):
        RunConfig("batch", parallelism=0)
    with pytest.raises(ValueError):
        RunConfig("batch", r_values=())
    with pytest.raises(ValueError):
        RunConfig("batch", r_values=(1, 0))
    with pytest.raises(ValueError):
        RunConfig("batch", p_min=100, p_max=50)


def test_parallelism_resolution(monkeypatch):
    monkeypatch.delenv(PARALLEL_ENV, raising=False)
    assert cli._resolve_parallelism(None) == 1
    assert cli._resolve_parallelism(3) == 3
    monkeypatch.setenv(PARALLEL_ENV, "4")
    assert cli._resolve_parallelism(None) == 4
    assert cli._resolve_parallelism(2) == 2  # flag wins
    monkeypatch.setenv(PARALLEL_ENV, "soon")
    with pytest.raises(ValueError):
        cli._resolve_parallelism(None)


def test_bad_parallel_env_exits_two(monkeypatch, capfdbinary):
    monkeypatch.setenv(PARALLEL_ENV, "soon")
    assert run(["batch"]) == 2
    _, err = capfdbinary.readouterr()
    assert PARALLEL_ENV.encode() in err


def test_wz_fuzz_cli_is_deterministic(capfdbinary):
    args = ["wz-fuzz", "--count", "20", "--telescope-count", "5"]
    assert run(args) == 0
    first, _ = capfdbinary.readouterr()
    assert run(args) == 0
    second, _ = capfdbinary.readouterr()
    assert first == second
    assert len(first.splitlines()) == 25


def test_batch_bytes_independent_of_parallelism(monkeypatch, capfdbinary):
    monkeypatch.delenv(PARALLEL_ENV, raising=False)
    assert run(["batch"]) == 0
    serial, _ = capfdbinary.readouterr()
    assert run(["batch", "--parallel", "8"]) == 0
    parallel, _ = capfdbinary.readouterr()
    assert serial == parallel
    assert len(serial.splitlines()) == 52
    assert all(json.loads(line)["pass"] is True for line in serial.splitlines())


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "supercong.cli", *THEOREM_ARGS],
        capture_output=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout == THEOREM_LINE


def test_text_format_end_to_end(capfdbinary):
    assert run(THEOREM_ARGS + ["--format", "text"]) == 0
    out, _ = capfdbinary.readouterr()
    assert out.startswith(b"PASS theorem (c=1,d=4,s=3,p=7,r=1): v=4 >= 4")
    assert b"1 passed, 0 failed, 0 skipped, 0 informational" in out


def test_timings_flag_end_to_end(capfdbinary):
    assert run(THEOREM_ARGS + ["--timings"]) == 0
    out, _ = capfdbinary.readouterr()
    assert "elapsed_ms" in json.loads(out)

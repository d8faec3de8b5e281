"""Command line behavior: formats, exit codes, determinism."""

import csv
import io
import json
import os
import subprocess
import sys

import pytest

from whitlocal import LaurentPoly, UnramifiedRep, local_zeta_unramified
from whitlocal.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_process(*argv, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "whitlocal", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


class TestExitCodes:
    def test_success(self, capsys):
        code, _, _ = run_cli("params", "--n", "2", capsys=capsys)
        assert code == 0

    def test_failing_suite_still_emits_report(self, capsys):
        code, out, _ = run_cli("verify", "--suite", "negative-control", capsys=capsys)
        assert code == 1
        obj = json.loads(out)
        assert obj["status"] == "fail"
        assert any(c["status"] == "fail" and c["witness"] for c in obj["checks"])

    def test_invalid_input(self, capsys):
        code, _, err = run_cli("zeta", "--n", "0", capsys=capsys)
        assert code == 2
        assert "error:" in err

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli("verify", "--suite", "nonsense", capsys=capsys)
        assert code == 2
        assert "unknown suite" in err

    def test_bad_flag_exits_two(self):
        proc = run_process("zeta", "--no-such-flag")
        assert proc.returncode == 2

    def test_bad_subcommand_exits_two(self):
        proc = run_process("frobnicate")
        assert proc.returncode == 2

    def test_bad_jobs_env_exits_two(self):
        proc = run_process("verify", "--suite", "involution",
                           env_extra={"WHITLOCAL_JOBS": "many"})
        assert proc.returncode == 2

    def test_mu_must_be_integers(self):
        proc = run_process("whittaker", "--n", "2", "--mu", "a,b")
        assert proc.returncode == 2


class TestEmitFormats:
    def test_json_parses(self, capsys):
        code, out, _ = run_cli("whittaker", "--n", "2", "--mu", "1,0", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert obj["value"] == "a1*q^(-1/2) + a2*q^(-1/2)"
        assert obj["model"] == "spherical"

    def test_csv_parses(self, capsys):
        code, out, _ = run_cli("index", "--n", "2", "--p", "2", "--level", "1",
                               "--emit", "csv", capsys=capsys)
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["field", "value"]
        values = dict(rows[1:])
        assert values["index"] == "3"

    def test_text_lines(self, capsys):
        code, out, _ = run_cli("params", "--n", "2", "--s", "1/2", "--w", "1/2",
                               "--emit", "text", capsys=capsys)
        assert code == 0
        assert "isFixedPoint = true" in out

    def test_report_csv(self, capsys):
        code, out, _ = run_cli("verify", "--suite", "weyl", "--emit", "csv",
                               capsys=capsys)
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:2] == ["suite", "check_id"]
        assert all(row[3] == "pass" for row in rows[1:])

    def test_report_text(self, capsys):
        code, out, _ = run_cli("verify", "--suite", "cusp", "--emit", "text",
                               capsys=capsys)
        assert code == 0
        assert "suite cusp: pass" in out


class TestPayloadContent:
    def test_zeta_coefficients_match_library(self, capsys):
        code, out, _ = run_cli("zeta", "--n", "1", "--order", "4", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        result = local_zeta_unramified(
            UnramifiedRep.symbolic(2, "a"), UnramifiedRep.symbolic(1, "b"), order=4
        )
        assert obj["series"]["coeffs"] == [c.to_text() for c in result.series.coeffs]
        assert obj["matchesClosedForm"] is True

    def test_lfactor_denominator(self, capsys):
        code, out, _ = run_cli("lfactor", "--rank-a", "1", "--rank-b", "1",
                               capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert LaurentPoly.parse(obj["denominator"]) == LaurentPoly.parse("1 - X*a1*b1")

    def test_lfactor_rank_cap(self, capsys):
        code, _, err = run_cli("lfactor", "--rank-a", "5", "--rank-b", "4",
                               capsys=capsys)
        assert code == 2
        assert "cap" in err

    def test_weight_q_payload(self, capsys):
        code, out, _ = run_cli("weight", "--place", "q", "--n", "2", "--cond", "1",
                               "--level", "1", "--p", "2", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert obj["value"] == "1/3"
        assert obj["paperComparison"]["computedConstant"] == "1/3"

    def test_weight_l_payload(self, capsys):
        code, out, _ = run_cli("weight", "--place", "l", "--n", "2", "--level", "1",
                               "--order", "4", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert obj["value"]["coeffs"][1] == "b1*g1 + b2*g1"
        assert obj["paperComparison"]["computedConstant"] == "q"

    def test_charsum_oracle_fields(self, capsys):
        code, out, _ = run_cli("charsum", "--p", "3", "--level", "1",
                               "--valuations", "1,2", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert obj["value"] == "9"
        assert obj["agree"] is True

    def test_charsum_symbolic(self, capsys):
        code, out, _ = run_cli("charsum", "--p", "symbolic", "--level", "2",
                               "--valuations", "2,2", capsys=capsys)
        assert code == 0
        obj = json.loads(out)
        assert obj["value"] == "q^4"
        assert "numericOracle" not in obj

    def test_twisted_whittaker(self, capsys):
        code, out, _ = run_cli("whittaker", "--n", "2", "--mu", "0", "--level", "1",
                               capsys=capsys)
        assert code == 0
        assert json.loads(out)["value"] == "0"


class TestDeterminism:
    def test_same_invocation_same_bytes(self, capsys):
        _, first, _ = run_cli("verify", "--suite", "involution", capsys=capsys)
        _, second, _ = run_cli("verify", "--suite", "involution", capsys=capsys)
        assert first == second

    def test_seeded_suite_is_reproducible(self, capsys):
        _, first, _ = run_cli("verify", "--suite", "contragredient", "--seed", "7",
                              capsys=capsys)
        _, second, _ = run_cli("verify", "--suite", "contragredient", "--seed", "7",
                               capsys=capsys)
        assert first == second

    def test_timings_are_opt_in(self, capsys):
        _, out, _ = run_cli("verify", "--suite", "weyl", capsys=capsys)
        assert "millis" not in out
        _, out, _ = run_cli("verify", "--suite", "weyl", "--timings", capsys=capsys)
        assert "millis" in out


@pytest.mark.parametrize("suite", ["involution", "weyl", "cusp", "weight-q"])
def test_cheap_suites_pass(suite, capsys):
    code, out, _ = run_cli("verify", "--suite", suite, capsys=capsys)
    assert code == 0
    assert json.loads(out)["status"] == "pass"

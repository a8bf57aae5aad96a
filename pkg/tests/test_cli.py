"""Command-line interface: output formats, exit codes, and stdout
byte-determinism across worker counts."""

import json
import subprocess
import sys

import pytest

from mayskit import (
    Rule,
    generate_certificate,
    parse_profile,
    save_certificate,
    save_rule,
)
from mayskit.cli import main


def run_main(argv):
    try:
        return main(argv)
    except SystemExit as exc:  # argparse errors exit instead of returning
        return int(exc.code or 0)


@pytest.fixture()
def const_tie_file(tmp_path):
    path = str(tmp_path / "const_tie.rule")
    save_rule(Rule.from_table(1, [0, 0, 0]), path)
    return path


@pytest.fixture()
def dictator_file(tmp_path):
    path = str(tmp_path / "dictator.rule")
    save_rule(Rule.from_table(2, [c % 3 for c in range(9)]), path)
    return path


class TestEval:
    def test_majority_examples(self, capsys):
        assert run_main(["eval", "--majority", "3", "++-"]) == 0
        assert capsys.readouterr().out == "ForWins\n"
        assert run_main(["eval", "--majority", "2", "+-"]) == 0
        assert capsys.readouterr().out == "Tie\n"
        assert run_main(["eval", "--majority", "0", ""]) == 0
        assert capsys.readouterr().out == "Tie\n"

    def test_rule_file(self, const_tie_file, capsys):
        assert run_main(["eval", "--rule", const_tie_file, "+"]) == 0
        assert capsys.readouterr().out == "Tie\n"

    def test_json(self, capsys):
        assert run_main(["eval", "--majority", "2", "--json", "+-"]) == 0
        assert json.loads(capsys.readouterr().out) == {"outcome": "Tie"}

    def test_leading_dash_profile_after_separator(self, capsys):
        assert run_main(["eval", "--majority", "2", "--json", "--", "--"]) == 0
        assert json.loads(capsys.readouterr().out) == {"outcome": "AgainstWins"}

    def test_bad_profile(self, capsys):
        assert run_main(["eval", "--majority", "2", "+x"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_arity_mismatch_is_usage_error(self, capsys):
        assert run_main(["eval", "--majority", "2", "+-0"]) == 2

    def test_negative_majority(self, capsys):
        assert run_main(["eval", "--majority", "-1", "+"]) == 2


class TestCheck:
    def test_majority_passes(self, capsys):
        assert run_main(["check", "--majority", "2"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == [
            "Anonymity: pass",
            "Neutrality: pass",
            "Monotonicity: pass",
        ]

    def test_dictator_fails(self, dictator_file, capsys):
        assert run_main(["check", "--rule", dictator_file]) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "Anonymity: fail at profile '+0', voters 0 and 1"
        assert lines[1] == "Neutrality: pass"
        assert lines[2] == "Monotonicity: fail at profile '00', voter 1, clause 3"

    def test_single_axiom(self, dictator_file, capsys):
        assert run_main(["check", "--rule", dictator_file, "--axiom", "neutral"]) == 0
        assert capsys.readouterr().out == "Neutrality: pass\n"
        assert run_main(["check", "--rule", dictator_file, "--axiom", "anon"]) == 1

    def test_monotone_witness_text(self, const_tie_file, capsys):
        assert run_main(["check", "--rule", const_tie_file, "--axiom", "mono"]) == 1
        assert capsys.readouterr().out == "Monotonicity: fail at profile '0', voter 0, clause 3\n"

    def test_json_shape(self, const_tie_file, capsys):
        assert run_main(["check", "--rule", const_tie_file, "--json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["all_pass"] is False
        assert [r["axiom"] for r in data["reports"]] == [
            "Anonymity",
            "Neutrality",
            "Monotonicity",
        ]
        mono = data["reports"][2]
        assert mono["status"] == "fail"
        assert mono["witness"] == {"profile": "0", "voter": 0, "clause": 3}

    def test_sampled_flag(self, capsys):
        assert run_main(["check", "--majority", "11", "--sample", "50", "--seed", "3"]) == 0
        out = capsys.readouterr().out
        assert out.count("[sampled]") == 3

    def test_oversize_without_sample(self, capsys):
        assert run_main(["check", "--majority", "11"]) == 2
        assert "sample" in capsys.readouterr().err


class TestVerifyMays:
    def test_full_json(self, capsys):
        assert run_main(["verify-mays", "--n", "1", "--json"]) == 0
        captured = capsys.readouterr()
        assert json.loads(captured.out) == {
            "mode": "full",
            "n": 1,
            "total": 27,
            "passing": 1,
            "equals_majority": True,
            "survivors": [21],
        }
        assert captured.err.startswith("elapsed: ")

    def test_human_form(self, capsys):
        assert run_main(["verify-mays", "--n", "1"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines() == [
            "mode: full",
            "n: 1",
            "candidates: 27",
            "passing: 1",
            "equals majority: yes",
        ]

    def test_anonymous_mode(self, capsys):
        assert run_main(["verify-mays", "--n", "3", "--mode", "anonymous", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["mode"] == "anonymous"
        assert data["total"] == 3**10
        assert data["passing"] == 1

    def test_over_budget(self, capsys):
        assert run_main(["verify-mays", "--n", "3", "--json"]) == 2
        assert "3**27" in capsys.readouterr().err

    def test_workers_same_stdout(self, capsys):
        outs = []
        for workers in ("1", "3", "8"):
            assert run_main(["verify-mays", "--n", "2", "--workers", workers, "--json"]) == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1] == outs[2]

    def test_backend_flag(self, capsys):
        assert run_main(["verify-mays", "--n", "1", "--backend", "numpy", "--json"]) == 0
        base = capsys.readouterr().out
        assert run_main(["verify-mays", "--n", "1", "--json"]) == 0
        assert capsys.readouterr().out == base


class TestRefute:
    def test_equivalent(self, tmp_path, capsys):
        path = str(tmp_path / "maj.rule")
        save_rule(Rule.majority(2), path)
        assert run_main(["refute", "--rule", path, "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"verdict": "Equivalent"}

    def test_violation_text(self, const_tie_file, capsys):
        assert run_main(["refute", "--rule", const_tie_file]) == 1
        out = capsys.readouterr().out
        assert out == "Violation: Monotonicity at profile '-', voter 0, clause 2 (step 2)\n"

    def test_emit_and_validate_round_trip(self, const_tie_file, tmp_path, capsys):
        cert_path = str(tmp_path / "cert.json")
        assert run_main(["refute", "--rule", const_tie_file, "--emit-certificate", cert_path]) == 1
        capsys.readouterr()
        assert run_main(["validate", "--rule", const_tie_file, "--certificate", cert_path]) == 0
        out = capsys.readouterr().out
        assert out.startswith("certificate ok: Violation: Monotonicity")

    def test_emit_skipped_for_majority(self, tmp_path, capsys):
        rule_path = str(tmp_path / "maj.rule")
        cert_path = tmp_path / "cert.json"
        save_rule(Rule.majority(1), rule_path)
        assert run_main(["refute", "--rule", rule_path, "--emit-certificate", str(cert_path)]) == 0
        assert not cert_path.exists()
        assert "no certificate written" in capsys.readouterr().err

    def test_json_verdict(self, const_tie_file, capsys):
        assert run_main(["refute", "--rule", const_tie_file, "--json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] == "Violation"
        assert data["axiom"] == "Monotonicity"


class TestValidate:
    def test_rule_only(self, const_tie_file, capsys):
        assert run_main(["validate", "--rule", const_tie_file]) == 0
        assert capsys.readouterr().out.startswith("rule ok: ")

    def test_rule_only_json(self, const_tie_file, capsys):
        assert run_main(["validate", "--rule", const_tie_file, "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"rule": "ok", "n": 1, "majority": False}

    def test_tampered_certificate(self, const_tie_file, tmp_path, capsys):
        rule = Rule.from_table(1, [0, 0, 0])
        cert = generate_certificate(rule, parse_profile("+"))
        data = cert.to_dict()
        data["steps"][0]["post"] = "0"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert run_main(["validate", "--rule", const_tie_file, "--certificate", str(path)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_wrong_rule_for_certificate(self, tmp_path, capsys):
        tie_rule = Rule.from_table(1, [0, 0, 0])
        cert = generate_certificate(tie_rule, parse_profile("+"))
        cert_path = tmp_path / "cert.json"
        save_certificate(cert, cert_path)
        other_path = str(tmp_path / "for.rule")
        save_rule(Rule.from_table(1, [1, 1, 1]), other_path)
        assert run_main(["validate", "--rule", other_path, "--certificate", str(cert_path)]) == 2
        assert "does not apply" in capsys.readouterr().err

    def test_json_confirmed(self, const_tie_file, tmp_path, capsys):
        cert = generate_certificate(Rule.from_table(1, [0, 0, 0]), parse_profile("+"))
        cert_path = tmp_path / "cert.json"
        save_certificate(cert, cert_path)
        assert (
            run_main(
                ["validate", "--rule", const_tie_file, "--certificate", str(cert_path), "--json"]
            )
            == 0
        )
        data = json.loads(capsys.readouterr().out)
        assert data["certificate"] == "ok"
        assert data["confirmed"] is True
        assert data["verdict"] == "Violation"


class TestUsageErrors:
    def test_missing_rule_source(self, capsys):
        assert run_main(["eval", "+-"]) == 2

    def test_both_rule_sources(self, const_tie_file, capsys):
        assert run_main(["eval", "--rule", const_tie_file, "--majority", "1", "+"]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run_main(["frobnicate"]) == 2

    def test_unknown_flag(self, capsys):
        assert run_main(["eval", "--majority", "1", "--fast", "+"]) == 2

    def test_missing_rule_file(self, capsys):
        assert run_main(["eval", "--rule", "/nonexistent/path.rule", "+"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_rule_file(self, tmp_path, capsys):
        path = tmp_path / "broken.rule"
        path.write_text("{oops", encoding="utf-8")
        assert run_main(["eval", "--rule", str(path), "+"]) == 2
        assert "not valid JSON" in capsys.readouterr().err

    def test_missing_certificate_file(self, const_tie_file, capsys):
        assert (
            run_main(["validate", "--rule", const_tie_file, "--certificate", "/nonexistent.json"])
            == 2
        )


class TestSubprocess:
    """End-to-end through the real interpreter; kept minimal because every
    spawn pays the import cost."""

    @staticmethod
    def run(args):
        return subprocess.run(
            [sys.executable, "-m", "mayskit.cli", *args],
            capture_output=True,
            text=True,
            timeout=300,
        )

    def test_worker_bytes_identical(self):
        results = [
            self.run(["verify-mays", "--n", "2", "--workers", w, "--json"]) for w in ("1", "4")
        ]
        assert all(r.returncode == 0 for r in results)
        assert results[0].stdout == results[1].stdout
        assert all(r.stderr.startswith("elapsed: ") for r in results)

    def test_usage_error_exit_code(self):
        result = self.run(["verify-mays"])
        assert result.returncode == 2
        assert "usage" in result.stderr

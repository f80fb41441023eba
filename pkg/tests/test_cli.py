import json
import os
import subprocess
import sys
from pathlib import Path

from arfrf.cli import main, render_binomial, render_monomial
from arfrf.lattice import Binomial

SRC = str(Path(__file__).resolve().parents[1] / "src")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestRendering:
    def test_monomials(self):
        assert render_monomial((3, 0, 1, 0)) == "x1^3*x3"
        assert render_monomial((0, 1, 0, 1)) == "x2*x4"
        assert render_monomial((0, 0)) == "1"

    def test_binomial(self):
        b = Binomial(plus=(5, 0), minus=(0, 2))
        assert render_binomial(b) == "x1^5 - x2^2"


class TestAnalyze:
    def test_worked_example(self, capsys):
        code, doc, _ = run_json(capsys, "analyze", "5", "19", "21", "22", "23")
        assert code == 0
        payload = doc["payload"]
        assert payload["conductor"] == 19
        assert payload["pseudo_frobenius"] == [14, 16, 17, 18]
        assert payload["is_arf"] is True
        assert doc["schema_version"] == "1"

    def test_naturals(self, capsys):
        code, doc, _ = run_json(capsys, "analyze", "1")
        assert code == 0
        assert doc["payload"]["frobenius"] == -1

    def test_oracle_example(self, capsys):
        code, doc, _ = run_json(capsys, "analyze", "6", "9", "20")
        assert code == 0
        assert doc["payload"]["frobenius"] == 43

    def test_gcd_failure_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "analyze", "4", "6")
        assert code == 2
        assert "gcd 2" in err

    def test_text_and_json_payloads_agree(self, capsys):
        code, doc, _ = run_json(capsys, "analyze", "5", "19", "21", "22", "23")
        _, text, _ = run_cli(capsys, "analyze", "5", "19", "21", "22", "23")
        payload = doc["payload"]
        assert f"frobenius F           : {payload['frobenius']}" in text
        assert " ".join(map(str, payload["pseudo_frobenius"])) in text


class TestRF:
    def test_count_only(self, capsys):
        code, doc, _ = run_json(
            capsys, "rf", "5", "19", "21", "22", "23", "--pf", "18", "--count-only"
        )
        assert code == 0
        [block] = doc["payload"]["rf"]
        assert block == {"pf_element": 18, "count": 4}

    def test_dets_include_paper_value(self, capsys):
        code, doc, _ = run_json(
            capsys, "rf", "4", "10", "21", "23", "--pf", "19", "--dets"
        )
        assert code == 0
        [block] = doc["payload"]["rf"]
        assert -19 in block["determinants"]

    def test_single_matrix(self, capsys):
        code, doc, _ = run_json(capsys, "rf", "2", "5", "--dets")
        assert code == 0
        [block] = doc["payload"]["rf"]
        assert block["matrices"] == [[[-1, 1], [4, -1]]]
        assert block["determinants"] == [-3]

    def test_bad_pf_exit_3(self, capsys):
        code, out, err = run_cli(capsys, "rf", "2", "5", "--pf", "4")
        assert code == 3
        assert "[3]" in err

    def test_cap_exit_5(self, capsys):
        code, out, err = run_cli(
            capsys, "rf", "5", "19", "21", "22", "23", "--pf", "18", "--max-rf", "2"
        )
        assert code == 5
        assert "cap" in err

    def test_witness_flag(self, capsys):
        code, doc, _ = run_json(capsys, "rf", "2", "5", "--witness")
        assert code == 0
        assert doc["payload"]["det_witness_value"] == -3
        assert doc["payload"]["sign_target"] == -3
        assert doc["payload"]["sign_witness_found"] is True


class TestGeneric:
    def test_generic_exit_0(self, capsys):
        code, doc, _ = run_json(capsys, "generic", "3", "7", "8")
        assert code == 0
        assert doc["payload"]["generic"] is True
        assert doc["payload"]["witness"] == "all criteria passed"

    def test_not_generic_exit_1(self, capsys):
        code, doc, _ = run_json(capsys, "generic", "4", "10", "21", "23")
        assert code == 1
        assert doc["payload"]["generic"] is False
        witness = doc["payload"]["witness"]
        assert witness["column"] >= 1 and len(witness["rows"]) == 2

    def test_generic_small(self, capsys):
        code, _, _ = run_json(capsys, "generic", "2", "3")
        assert code == 0


class TestRelations:
    def test_worked_example(self, capsys):
        code, doc, _ = run_json(capsys, "relations", "4", "10", "21", "23")
        assert code == 0
        payload = doc["payload"]
        assert payload["determinant"] == -19
        assert payload["index"] == 1
        binomials = {rel["binomial"] for rel in payload["relations"]}
        assert binomials == {
            "x1^3*x3 - x2*x4",
            "x1^11 - x3*x4",
            "x1^9*x2 - x4^2",
            "x1^8*x2 - x3^2",
            "x1^6*x2^2 - x3*x4",
            "x1^2*x4 - x2*x3",
        }
        diffs = {(rel["i"], rel["j"]): rel["vector"] for rel in payload["row_differences"]}
        assert diffs[(1, 2)] == [-3, 1, -1, 1]

    def test_two_generators(self, capsys):
        code, doc, _ = run_json(capsys, "relations", "2", "5")
        assert code == 0
        [rel] = doc["payload"]["relations"]
        assert rel["binomial"] == "x1^5 - x2^2"

    def test_index_one_for_small_multiplicity(self, capsys):
        code, doc, _ = run_json(capsys, "relations", "3", "7", "8")
        assert code == 0
        assert doc["payload"]["index"] == 1

    def test_naturals_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "relations", "1")
        assert code == 3


class TestClosure:
    def test_example(self, capsys):
        code, doc, _ = run_json(capsys, "closure", "4", "6", "9")
        assert code == 0
        payload = doc["payload"]
        assert payload["was_arf"] is False
        assert payload["closure"]["generators"] == [4, 6, 9, 11]
        assert payload["added_elements"] == [11]

    def test_fixpoint(self, capsys):
        code, doc, _ = run_json(capsys, "closure", "3", "5", "7")
        assert code == 0
        assert doc["payload"]["was_arf"] is True
        assert doc["payload"]["added_elements"] == []

    def test_naturals(self, capsys):
        code, doc, _ = run_json(capsys, "closure", "1")
        assert code == 0
        assert doc["payload"]["was_arf"] is True


class TestEdgeCases:
    def test_rf_on_naturals_has_no_blocks(self, capsys):
        code, doc, _ = run_json(capsys, "rf", "1")
        assert code == 0
        assert doc["payload"]["rf"] == []

    def test_generic_naturals_vacuous(self, capsys):
        code, doc, _ = run_json(capsys, "generic", "1")
        assert code == 0
        assert doc["payload"]["generic"] is True

    def test_grid_cap_exit_4(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "verify", "--claim", "Prop3.1", "--s-max", "5000",
            "--report-dir", str(tmp_path),
        )
        assert code == 4
        assert "cap" in err

    def test_bad_families_in_config_exit_4(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("families = everything\n")
        code, _, err = run_cli(
            capsys, "verify", "--claim", "Conj5.3", "--config", str(cfg),
            "--report-dir", str(tmp_path),
        )
        assert code == 4

    def test_repeated_claims_run_in_order(self, capsys, tmp_path):
        code, doc, _ = run_json(
            capsys, "verify", "--claim", "Prop3.2", "--claim", "Prop3.1",
            "--s-max", "30", "--report-dir", str(tmp_path),
        )
        assert code == 0
        ids = [c["claim_id"] for c in doc["payload"]["summary"]["claims"]]
        assert ids == ["Prop3.2", "Prop3.1"]


class TestVerifyCommand:
    def test_single_claim(self, capsys, tmp_path):
        code, doc, _ = run_json(
            capsys, "verify", "--claim", "Prop3.1", "--s-max", "50",
            "--report-dir", str(tmp_path),
        )
        assert code == 0
        summary = doc["payload"]["summary"]
        assert summary["claims"] == [
            {"claim_id": "Prop3.1", "status": "pass", "checked": 25}
        ]
        assert (tmp_path / "Prop3.1.json").exists()
        assert (tmp_path / "summary.json").exists()
        report = json.loads((tmp_path / "Prop3.1.json").read_text())
        assert report["status"] == "pass"

    def test_expected_mismatch_still_ok(self, capsys, tmp_path):
        code, doc, _ = run_json(
            capsys, "verify", "--claim", "Prop3.6", "--s-max", "30",
            "--report-dir", str(tmp_path),
        )
        assert code == 0
        [claim] = doc["payload"]["summary"]["claims"]
        assert claim["status"] == "mismatch-with-details"

    def test_unknown_claim_exit_4(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "verify", "--claim", "Nope", "--report-dir", str(tmp_path)
        )
        assert code == 4

    def test_unknown_suite_exit_4(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "verify", "--suite", "huge", "--report-dir", str(tmp_path)
        )
        assert code == 4

    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("s_max = 40\nclaims = Prop3.2, Prop3.3\n")
        code, doc, _ = run_json(
            capsys, "verify", "--config", str(cfg), "--report-dir", str(tmp_path / "r")
        )
        assert code == 0
        ids = [c["claim_id"] for c in doc["payload"]["summary"]["claims"]]
        assert ids == ["Prop3.2", "Prop3.3"]

    def test_bad_config_exit_4(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("wat = 1\n")
        code, _, err = run_cli(
            capsys, "verify", "--config", str(cfg), "--report-dir", str(tmp_path)
        )
        assert code == 4

    def test_reports_byte_identical(self, capsys, tmp_path):
        for sub in ("a", "b"):
            run_cli(
                capsys, "verify", "--claim", "Prop3.2", "--s-max", "30",
                "--report-dir", str(tmp_path / sub),
            )
        assert (tmp_path / "a" / "Prop3.2.json").read_bytes() == (
            tmp_path / "b" / "Prop3.2.json"
        ).read_bytes()


def test_module_entrypoint_subprocess(tmp_path):
    env = dict(os.environ, PYTHONPATH=SRC)
    proc = subprocess.run(
        [sys.executable, "-m", "arfrf", "analyze", "2", "5", "--format", "json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["frobenius"] == 3
    assert proc.stderr == ""

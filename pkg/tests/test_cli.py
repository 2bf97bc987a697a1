"""Command-line round trips, formats, and exit codes."""

from __future__ import annotations

import json

import pytest

import orientdiam as od
from orientdiam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstructAndDiameter:
    def test_construct_then_measure(self, capsys, tmp_path):
        path = tmp_path / "d10.json"
        code, _, _ = run(capsys, "construct", "--parts", "3,4,10", "--scheme", "paper",
                         "--out", str(path))
        assert code == 0
        code, out, _ = run(capsys, "diameter", "--file", str(path))
        assert code == 0
        assert out.strip() == "2"

    def test_round_trip_is_byte_identical(self, capsys, tmp_path):
        path = tmp_path / "d6.json"
        run(capsys, "construct", "--parts", "3,3,6", "--out", str(path))
        original = path.read_bytes()
        doc = json.loads(original)
        D = od.graphcore.from_json_dict(doc)
        re_emitted = od.graphcore.dumps(D, completion_log=doc["completion_log"])
        assert re_emitted.encode() == original

    def test_construct_rejects_unknown_family(self, capsys):
        code, _, err = run(capsys, "construct", "--parts", "3,5,9")
        assert code == 2
        assert "error" in err

    def test_construct_dot(self, capsys):
        code, out, _ = run(capsys, "construct", "--parts", "3,3,4", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")

    def test_middle_layer_scheme(self, capsys):
        code, out, _ = run(capsys, "construct", "--parts", "4,6", "--scheme", "middle-layer")
        assert code == 0
        assert json.loads(out)["parts"] == [4, 6]

    def test_tournament_scheme(self, capsys):
        code, out, _ = run(capsys, "construct", "--parts", "1,1,1,1,1", "--scheme", "tournament")
        assert code == 0
        assert len(json.loads(out)["arcs"]) == 10

    def test_missing_arc_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"parts":[1,1,1],"arcs":[[0,1],[1,2]]}')
        code, _, err = run(capsys, "diameter", "--file", str(path))
        assert code == 2
        assert "MissingEdge" in err

    def test_malformed_json_is_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"parts": [1,1,')
        code, _, err = run(capsys, "diameter", "--file", str(path))
        assert code == 2
        assert "ParseError" in err and "line" in err


class TestAnalyze:
    def test_text_report(self, capsys, tmp_path):
        path = tmp_path / "d6.json"
        run(capsys, "construct", "--parts", "3,3,6", "--out", str(path))
        code, out, _ = run(capsys, "analyze", "--file", str(path), "--anchor", "0")
        assert code == 0
        assert "sign partition" in out
        assert "pass" in out
        assert "raw (1, 1, 2)" in out

    def test_json_report(self, capsys, tmp_path):
        path = tmp_path / "d4.json"
        run(capsys, "construct", "--parts", "3,3,4", "--out", str(path))
        code, out, _ = run(capsys, "analyze", "--file", str(path), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["case_signature"]["raw"] == [0, 1, 1]
        assert doc["necessary_conditions"] == "pass"


class TestDecide:
    def test_exists_with_witness(self, capsys):
        code, out, _ = run(capsys, "decide", "--parts", "3,3,6")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "exists"
        D = od.graphcore.from_json_dict(doc["witness"])
        assert od.diameter(D) == 2

    def test_refutation(self, capsys):
        code, out, _ = run(capsys, "decide", "--parts", "3,3,7",
                           "--budget-seconds", "600", "--threads", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "none"
        assert len(doc["stats"]["cases_enumerated"]) == 10


class TestSmallCommands:
    def test_brute_force(self, capsys):
        code, out, _ = run(capsys, "brute-force", "--parts", "1,1,1,1")
        assert code == 0
        assert out.strip() == "3"

    def test_brute_force_json(self, capsys):
        code, out, _ = run(capsys, "brute-force", "--parts", "2,3", "--format", "json")
        assert json.loads(out)["oriented_diameter"] == 4

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--parts", "1,1,1")
        assert code == 0
        assert json.loads(out)["count"] == 2

    def test_export_cnf(self, capsys, tmp_path):
        path = tmp_path / "k337.cnf"
        code, out, _ = run(capsys, "export-cnf", "--parts", "3,3,7", "--out", str(path))
        assert code == 0
        assert path.exists()
        assert "51 edge" in out


class TestVerifyClaims:
    def test_33q_all_pass(self, capsys):
        code, out, _ = run(capsys, "verify-claims", "--family", "33q")
        assert code == 0
        assert out.count("PASS") == 5  # q = 3..6 constructive + q = 7 refuted
        assert "33q-q7" in out

    def test_34q_constructive_rows(self, capsys):
        code, out, _ = run(capsys, "verify-claims", "--family", "34q",
                           "--q-range", "4..11")
        assert code == 0
        assert out.count("PASS") == 8

    def test_baselines(self, capsys):
        code, out, _ = run(capsys, "verify-claims", "--family", "baselines",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        observed = {r["claim_id"]: r["observed"] for r in doc["claims"]}
        assert observed == {
            "baseline-K4": 3,
            "baseline-K5": 2,
            "baseline-K(2,2)": 3,
            "baseline-K(2,3)": 4,
        }

    def test_reports_deterministic_modulo_timing(self, capsys):
        def snapshot():
            _, out, _ = run(capsys, "verify-claims", "--family", "baselines",
                            "--format", "json")
            doc = json.loads(out)
            for row in doc["claims"]:
                row.pop("wall_time")
            return doc

        assert snapshot() == snapshot()

    def test_bad_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify-claims", "--family", "55q"])
        assert exc.value.code == 2

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify-claims", "--family", "33q", "--q-range", "bogus")
        assert code == 2

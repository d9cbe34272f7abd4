"""
Pruebas de la línea de comandos de extremo a extremo
"""
import json

import pytest

from cli.handler import main


def _run(capsys, tmp_path, *args):
    code = main([*args, "--cache-dir", str(tmp_path / "cache"), "--log-level", "ERROR"])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _error_payload(err):
    # El payload es el último objeto JSON escrito en stderr
    return json.loads(err[err.rindex('{\n  "details"'):])


class TestSeq:
    def test_paperfolding_prefix(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "seq", "--name", "paperfolding", "--n", "15", "--format", "csv")
        assert code == 0
        assert out.splitlines() == list("110110011100100")

    def test_empty_prefix(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "seq", "--name", "paperfolding", "--n", "0")
        assert code == 0
        assert out == ""

    def test_thue_morse(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "seq", "--name", "thue-morse-pm1", "--n", "4", "--format", "json")
        assert code == 0
        assert json.loads(out) == [1, -1, -1, 1]

    def test_unknown_name(self, capsys, tmp_path):
        code, out, err = _run(capsys, tmp_path, "seq", "--name", "fibonacci-word", "--n", "4")
        assert code == 2
        assert out == ""
        assert _error_payload(err)["error"] == "UsageError"

    def test_bad_argument(self, capsys, tmp_path):
        code, _, err = _run(capsys, tmp_path, "seq", "--n", "-1")
        assert code == 2
        assert _error_payload(err)["error"] == "UsageError"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "prefix.csv"
        code, out, _ = _run(capsys, tmp_path, "seq", "--n", "4", "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text() == "1\n1\n0\n1\n"


class TestFamilies:
    def test_requires_period(self, capsys, tmp_path):
        code, _, err = _run(capsys, tmp_path, "families", "--max-n", "5")
        assert code == 2
        assert _error_payload(err)["details"] == {"max_n": 5}

    def test_all_checks(self, capsys, tmp_path):
        code, out, _ = _run(
            capsys, tmp_path, "families", "--max-n", "20",
            "--verify-lemma1", "--verify-prop2", "--verify-star",
        )
        report = json.loads(out)
        assert code == 0
        assert report["status"] == "pass"
        names = [check["name"] for check in report["checks"]]
        assert names == ["lemma1", "prop2", "block-conjugation", "star"]
        assert "identidad (2) con variante" in report["checks"][0]["summary"]
        assert report["data"]["table"][0] == {
            "n": 1, "a": "1", "b": "0", "c": "-1", "d": "0", "e": "0", "g": "-1", "h": "1", "x": "1", "y": "0",
        }

    def test_other_sequence_skips_paperfolding_checks(self, capsys, tmp_path):
        code, out, _ = _run(
            capsys, tmp_path, "families", "--name", "thue-morse-pm1", "--max-n", "10",
            "--verify-lemma1", "--verify-star",
        )
        report = json.loads(out)
        assert code == 0
        statuses = {check["name"]: check["status"] for check in report["checks"]}
        assert statuses == {"lemma1": "skipped", "nonvanishing": "pass"}

    def test_csv_output(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "families", "--max-n", "10", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,a,b,c,d,e,g,h,x,y"
        assert len(lines) == 11

    def test_table_output_alongside_report(self, capsys, tmp_path):
        target = tmp_path / "tables" / "families.csv"
        code, out, _ = _run(
            capsys, tmp_path, "families", "--max-n", "10", "--verify-prop2", "--table-output", str(target),
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"
        lines = target.read_text().splitlines()
        assert lines[0] == "n,a,b,c,d,e,g,h,x,y"
        assert lines[1] == "1,1,0,-1,0,0,-1,1,1,0"
        assert len(lines) == 11

    def test_text_output(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "families", "--max-n", "10", "--verify-prop2", "--format", "text")
        assert code == 0
        assert "Estado: PASS" in out
        assert "[OK] prop2" in out

    def test_deterministic_without_timings(self, capsys, tmp_path):
        args = ("families", "--max-n", "12", "--verify-prop2", "--verify-star", "--no-timings")
        _, first, _ = _run(capsys, tmp_path, *args)
        _, second, _ = _run(capsys, tmp_path, *args)
        assert first == second
        assert "seconds" not in first


class TestHankelTable:
    def test_csv_table(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "hankel-table", "--max-n", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,a,b,c,d,e,g,h,x,y"
        assert lines[1] == "1,1,0,-1,0,0,-1,1,1,0"
        assert lines[2] == "2,-1,1,0,-1,1,0,-1,0,-1"
        assert len(lines) == 6

    def test_table_is_cached(self, capsys, tmp_path):
        _run(capsys, tmp_path, "hankel-table", "--max-n", "6")
        assert len(list((tmp_path / "cache").glob("*.csv"))) == 1
        code, out, _ = _run(capsys, tmp_path, "hankel-table", "--max-n", "6")
        assert code == 0
        assert len(out.splitlines()) == 7


class TestPade:
    def test_order_one(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "pade", "--k", "1")
        report = json.loads(out)
        assert code == 0
        assert report["data"]["approximant"]["h_num"] == "-1"
        assert report["data"]["cleared"] == {"P": ["1"], "Q": ["1", "-1"]}

    def test_verify(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "pade", "--k", "11", "--verify")
        report = json.loads(out)
        assert code == 0
        assert report["checks"][0]["name"] == "error-expansion"
        assert report["checks"][0]["status"] == "pass"


class TestExponent:
    def test_requires_mode(self, capsys, tmp_path):
        code, _, _ = _run(capsys, tmp_path, "exponent")
        assert code == 2

    def test_only_paperfolding(self, capsys, tmp_path):
        code, _, err = _run(capsys, tmp_path, "exponent", "--name", "cantor", "--ladder", "11:21:10")
        assert code == 2
        assert "supported" in _error_payload(err)["details"]

    def test_ladder(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "exponent", "--ladder", "11:101:10")
        report = json.loads(out)
        assert code == 0
        ladder = report["data"]["ladder"]
        assert len(ladder) == 10
        assert ladder[0]["mu_bound"] == "23/3"
        assert report["checks"][0]["status"] == "pass"

    def test_merged(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "exponent", "--merged", "--L", "13")
        report = json.loads(out)
        assert code == 0
        assert report["data"]["merged"]["mu_bound_float"] == pytest.approx(2.034, abs=0.005)

    def test_merged_empty_window(self, capsys, tmp_path):
        code, _, err = _run(capsys, tmp_path, "exponent", "--merged", "--L", "3")
        assert code == 1
        assert _error_payload(err)["error"] == "EmptyWindowError"

    def test_convergents(self, capsys, tmp_path):
        code, out, _ = _run(capsys, tmp_path, "exponent", "--l", "11", "--m-max", "3")
        report = json.loads(out)
        assert code == 0
        records = report["data"]["records"]
        assert [record["m"] for record in records] == [1, 2, 3]
        assert report["data"]["summary"]["best_mu"] == "23/3"


@pytest.mark.slow
def test_families_acceptance(capsys, tmp_path):
    code, out, _ = _run(
        capsys, tmp_path, "families", "--max-n", "100",
        "--verify-lemma1", "--verify-prop2", "--verify-star",
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


@pytest.mark.slow
def test_exponent_acceptance(capsys, tmp_path):
    code, out, _ = _run(capsys, tmp_path, "exponent", "--l", "11", "--m-max", "8", "--profile", "acceptance")
    report = json.loads(out)
    assert code == 0
    statuses = {check["name"]: check["status"] for check in report["checks"]}
    assert statuses["sandwich"] == "pass"
    assert statuses["effective-exponent"] == "pass"

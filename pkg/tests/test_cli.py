import json

import pytest

from pignistic.cli import EXIT_INVALID_INPUT, EXIT_NO_CONVERGENCE, EXIT_OK, main


@pytest.fixture
def combat_path(data_dir):
    return str(data_dir / "combat_id.json")


@pytest.fixture
def thresholds_path(data_dir):
    return str(data_dir / "thresholds_standard.json")


class TestTransformCommand:
    def test_betp_table(self, capsys, combat_path):
        assert main(["transform", "--method", "betp", "--input", combat_path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "0.398333" in out

    def test_prscp_record(self, capsys, combat_path):
        code = main(
            ["transform", "--method", "prscp", "--input", combat_path,
             "--format", "record"]
        )
        assert code == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["method"] == "PrScP"
        assert record["probabilities"][0] == pytest.approx(0.542030, abs=1e-4)
        assert "iterations" in record

    def test_solver_flags(self, capsys, combat_path):
        code = main(
            ["transform", "--method", "prscp", "--input", combat_path,
             "--tolerance", "1e-8", "--max-iter", "200"]
        )
        assert code == EXIT_OK

    def test_no_convergence_exit_code(self, capsys, combat_path):
        code = main(
            ["transform", "--method", "prscp", "--input", combat_path,
             "--tolerance", "1e-15", "--max-iter", "3"]
        )
        assert code == EXIT_NO_CONVERGENCE
        assert "error" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        code = main(
            ["transform", "--method", "betp", "--input", str(tmp_path / "nope.json")]
        )
        assert code == EXIT_INVALID_INPUT


class TestPicCommand:
    def test_from_bba(self, capsys, combat_path):
        assert main(["pic", "--input", combat_path, "--method", "betp"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "0.092643"

    def test_from_distribution(self, capsys, tmp_path):
        doc = tmp_path / "dist.json"
        doc.write_text('{"frame": ["a", "b"], "probabilities": [0.75, 0.25]}')
        assert main(["pic", "--input", str(doc)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "0.188722"


class TestDecideCommand:
    def test_forced_prscp(self, capsys, combat_path, tmp_path):
        permissive = tmp_path / "t.json"
        permissive.write_text(
            '{"profile_name": "permissive", "bel": [0.01, 0.05, 0.1], '
            '"pl": [2.5, 2.6, 2.7]}'
        )
        code = main(
            ["decide", "--input", combat_path, "--thresholds", str(permissive),
             "--risk", "0.0455", "--format", "record"]
        )
        assert code == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["method"] == "PrScP"
        assert record["selected"] == ["F", "N"]

    def test_standard_profile_selects_betp(self, capsys, combat_path, thresholds_path):
        code = main(
            ["decide", "--input", combat_path, "--thresholds", thresholds_path,
             "--risk", "0.0455", "--format", "record"]
        )
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["method"] == "BetP"

    def test_bad_thresholds(self, capsys, combat_path, data_dir):
        code = main(
            ["decide", "--input", combat_path,
             "--thresholds", str(data_dir / "invalid" / "thresholds_bad_order.json"),
             "--risk", "0.0455"]
        )
        assert code == EXIT_INVALID_INPUT


class TestCompareCommand:
    def test_reproduces_reference_values(self, capsys, combat_path):
        assert main(["compare", "--input", combat_path, "--risk", "0.0455"]) == EXIT_OK
        out = capsys.readouterr().out
        for value in [
            "0.398333", "0.343333", "0.153333", "0.105000",
            "0.402129", "0.352277", "0.139356", "0.106238",
            "0.454418", "0.360880", "0.117638", "0.067064",
            "0.517592", "0.405098", "0.030288", "0.047022",
            "0.542030", "0.386953", "0.032397", "0.038620",
        ]:
            assert value in out

    def test_decision_set_sizes(self, capsys, combat_path):
        main(["compare", "--input", combat_path, "--risk", "0.0455",
              "--format", "record"])
        records = json.loads(capsys.readouterr().out)
        sizes = {r["method"]: len(r["selected"]) for r in records}
        assert sizes == {"BetP": 4, "PraPl": 4, "PrPl": 4, "PrBl": 3, "PrScP": 2}


class TestInvalidCatalog:
    @pytest.mark.parametrize(
        "name",
        [
            "bad_json.json",
            "sum_mismatch.json",
            "unknown_label.json",
            "empty_set_mass.json",
            "duplicate_focal.json",
            "mass_out_of_range.json",
        ],
    )
    def test_exit_code_one(self, capsys, data_dir, name):
        code = main(
            ["transform", "--method", "betp",
             "--input", str(data_dir / "invalid" / name)]
        )
        assert code == EXIT_INVALID_INPUT
        assert "error" in capsys.readouterr().err

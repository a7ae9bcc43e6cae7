import json

import pytest

from trialg import serialize
from trialg.catalog import a3_st, a3_t, c3, grassmann_n5, o3
from trialg.cli import main
from trialg.superlie import lie_of


FINITE_FAMILIES = {
    "O3": o3(),
    "A3(1,2;t)": a3_t(1, 2),
    "A3(2,2;t)": a3_t(2, 2),
    "A3(2,3;t)": a3_t(2, 3),
    "A3(2,2;st)": a3_st(1, 1),
    "C3(2)": c3(1),
    "C3(4)": c3(2),
    "GrassmannN5(2)": grassmann_n5(2)[0],
}


class TestRoundTrip:
    @pytest.mark.parametrize("name", sorted(FINITE_FAMILIES))
    def test_tensor_exact_and_byte_deterministic(self, name):
        system = FINITE_FAMILIES[name]
        text1 = serialize.dumps(serialize.trialgebra_to_dict(system))
        text2 = serialize.dumps(serialize.trialgebra_to_dict(system))
        assert text1 == text2
        assert text1.endswith("\n")
        back = serialize.trialgebra_from_dict(json.loads(text1))
        assert back.tensor == system.tensor
        assert back.dim == system.dim
        assert back.basis_labels == system.basis_labels

    def test_rationals_serialize_as_strings(self):
        data = serialize.trialgebra_to_dict(c3(1))
        entry = data["bracket"]["0,0,1"]
        assert entry == {"1": "-2"}

    def test_superlie_round_trip_with_conjugation(self):
        lie = lie_of(a3_t(2, 2))
        data = serialize.superlie_to_dict(lie.algebra, lie.sigma)
        text = serialize.dumps(data)
        g, sigma = serialize.superlie_from_dict(json.loads(text))
        assert g.components == lie.algebra.components
        assert g.structure == lie.algebra.structure
        assert sigma is not None
        assert sigma.maps == lie.sigma.maps

    def test_unknown_fields_tolerated(self):
        data = serialize.trialgebra_to_dict(a3_t(1, 2))
        data["future-extension"] = {"ignored": True}
        back = serialize.trialgebra_from_dict(data)
        assert back.dim == 2


class TestExitCodes:
    def test_verify_pass_is_zero(self, capsys):
        assert main(["verify", "a3t", "--m", "2", "--n", "2", "--axioms", "n6"]) == 0
        assert "pass" in capsys.readouterr().out

    def test_verify_fail_is_one(self, capsys):
        assert main(["verify", "o3", "--axioms", "n5"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "witness" in out

    def test_verify_json_report(self, capsys):
        assert main(["verify", "a3t", "--m", "1", "--n", "2", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["passed"] is True and data["violations"] == []
        assert data["tuples_checked"] == 2**5 + 2**3

    def test_usage_error_is_two(self, capsys):
        assert main(["verify", "nosuchfamily"]) == 2

    def test_missing_param_is_two(self):
        assert main(["verify", "a3t", "--m", "2"]) == 2

    def test_argparse_usage_error_is_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify"])
        assert exc.value.code == 2

    def test_guardrail_without_sample_is_two(self, capsys):
        assert main(["verify", "a3t", "--m", "4", "--n", "4"]) == 2
        assert "TRIALG_MAX_DIM" in capsys.readouterr().err

    def test_guardrail_with_sample_passes(self):
        assert main(["verify", "a3t", "--m", "4", "--n", "4", "--sample", "60"]) == 0

    def test_guardrail_env_override(self, monkeypatch):
        monkeypatch.setenv("TRIALG_MAX_DIM", "16")
        assert main(["verify", "a3st", "--h", "1", "--k", "2", "--axioms", "n6"]) == 0


class TestBuildAndImport:
    def test_build_writes_deterministic_file(self, tmp_path, capsys):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        assert main(["build", "a3t", "--m", "2", "--n", "2", "--out", str(out1)]) == 0
        assert main(["build", "a3t", "--m", "2", "--n", "2", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        data = json.loads(out1.read_text())
        assert data["dim"] == 4 and data["kind"] == "trialgebra"

    def test_build_o3_entries(self, tmp_path):
        out = tmp_path / "o3.json"
        assert main(["build", "o3", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["dim"] == 4
        values = {v for entry in data["bracket"].values() for v in entry.values()}
        assert values == {"1", "-1"}

    def test_verify_from_file(self, tmp_path):
        out = tmp_path / "a.json"
        main(["build", "a3st", "--h", "1", "--k", "1", "--out", str(out)])
        assert main(["verify", str(out), "--axioms", "n8"]) == 0

    def test_mutated_file_fails_verification(self, tmp_path):
        out = tmp_path / "a.json"
        main(["build", "a3t", "--m", "2", "--n", "2", "--out", str(out)])
        data = json.loads(out.read_text())
        data["bracket"]["0,0,1"] = {"1": "7"}
        out.write_text(json.dumps(data))
        assert main(["verify", str(out), "--axioms", "n6"]) == 1

    def test_import_check_pass(self, tmp_path, capsys):
        out = tmp_path / "a.json"
        main(["build", "c3", "--n", "4", "--out", str(out)])
        assert main(["import-check", str(out)]) == 0
        assert "round trip: pass" in capsys.readouterr().out

    def test_import_check_malformed_is_two(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{\"schema\": \"trialg-1\"}")
        assert main(["import-check", str(bad)]) == 2

    def test_evaluator_build_records_default_matrix(self, tmp_path):
        out = tmp_path / "sw.json"
        assert main(["build", "sw3", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["kind"] == "evaluator"
        assert data["params"]["a"] == [["0", "1"], ["-1", "0"]]

    def test_evaluator_file_verifies(self, tmp_path):
        out = tmp_path / "sw.json"
        main(["build", "sw3", "--out", str(out)])
        assert main(["verify", str(out), "--axioms", "n6"]) == 0

    def test_export_to_stdout(self, capsys):
        assert main(["export", "a3t", "--m", "1", "--n", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["dim"] == 2


class TestLieCommand:
    def test_lie_all_checks(self, tmp_path, capsys):
        out = tmp_path / "lie.json"
        assert main(["lie", "a3t", "--m", "2", "--n", "2", "--check", "all", "--out", str(out)]) == 0
        text = capsys.readouterr().out
        for label in ("super-jacobi", "graded conjugation", "transitivity", "generation", "ideal property", "round trip"):
            assert f"{label}: pass" in text
        assert main(["import-check", str(out)]) == 0

    def test_lie_degenerate_reported(self, capsys):
        assert main(["lie", "a3t", "--m", "1", "--n", "1"]) == 0
        assert "degenerate" in capsys.readouterr().out

    def test_lie_c3(self, capsys):
        assert main(["lie", "c3", "--n", "2", "--check", "all"]) == 0

    def test_reduce_n5(self, tmp_path, capsys):
        out = tmp_path / "red.json"
        assert main(["reduce-n5", "a3t", "--m", "2", "--n", "2", "--out", str(out)]) == 0
        assert main(["verify", str(out), "--axioms", "n5"]) == 0

    def test_simplicity_values(self, capsys):
        assert main(["simplicity", "a3t", "--m", "1", "--n", "1"]) == 0
        assert "degenerate" in capsys.readouterr().out
        assert main(["simplicity", "a3t", "--m", "2", "--n", "2"]) == 0
        assert "simple" in capsys.readouterr().out

import json

from quandles import dihedral, symmetric_group
from quandles.cli import main
from quandles.group import conj_quandle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsingCommands:
    def test_build_six_cubic(self, capsys):
        code, out, _ = run(capsys, "build", "6; t^2+t+1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["order"] == 36
        assert data["invariant_factors"] == [6, 6]
        assert data["component_count"] == 3
        # the descriptor parses back to the same module
        code2, out2, _ = run(capsys, "build", data["descriptor"], "--format", "json")
        assert json.loads(out2) == data

    def test_build_dihedral_presentation(self, capsys):
        code, out, _ = run(capsys, "build", "12; t+1", "--format", "json")
        assert code == 0
        assert json.loads(out)["order"] == 12

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "build", "6; t^^2")
        assert code == 2
        assert "parse error" in err

    def test_bad_modulus_exit_code(self, capsys):
        assert run(capsys, "build", "0; t+1")[0] == 2

    def test_unsupported_presentation_exit_code(self, capsys):
        code, _, err = run(capsys, "build", "4; 2t+2")
        assert code == 4
        assert "unsupported" in err


class TestComputeCommands:
    def test_maxdecomp_six_cubic(self, capsys):
        code, out, _ = run(capsys, "maxdecomp", "--alexander", "6; t^2+t+1",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["depth"] == 2
        final = data["levels"][-1]
        assert len(final) == 9
        assert all(len(b) == 4 for b in final)

    def test_components_conj_s3(self, capsys):
        code, out, _ = run(capsys, "components", "--conj", "--symmetric", "3",
                           "--format", "json")
        assert code == 0
        blocks = json.loads(out)["blocks"]
        assert sorted(len(b) for b in blocks) == [1, 2, 3]

    def test_components_text_uses_labels(self, capsys):
        code, out, _ = run(capsys, "components", "--conj", "--symmetric", "3")
        assert code == 0
        assert "(1 2 3)" in out

    def test_group_source_requires_conj(self, capsys):
        code, _, err = run(capsys, "components", "--symmetric", "3")
        assert code == 2
        assert "--conj" in err

    def test_iso_found(self, capsys):
        code, out, _ = run(capsys, "iso", "--alexander", "3; t+1",
                           "--dihedral", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["isomorphic"] is True
        assert sorted(data["map"]) == [0, 1, 2]

    def test_iso_not_found(self, capsys):
        code, out, _ = run(capsys, "iso", "--dihedral", "3",
                           "--alexander", "5; t+1", "--format", "json")
        assert code == 0
        assert json.loads(out)["isomorphic"] is False

    def test_prop56(self, capsys):
        code, out, _ = run(capsys, "prop56", "12", "1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data == {"chain": [12, 6, 3], "depth": 2,
                        "block_count": 4, "block_modulus": 3}

    def test_theory(self, capsys):
        code, out, _ = run(capsys, "theory", "6; t^2+t+1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["orbit_count"] == 3
        assert "4+2t" in data["component_ideal"]

    def test_axioms_ok(self, capsys):
        code, out, _ = run(capsys, "axioms", "--dihedral", "7")
        assert code == 0
        assert out.strip() == "ok"

    def test_assoc_and_mcq_verbs(self, capsys, tmp_path):
        code, out, _ = run(capsys, "assoc", "--dihedral", "6", "--format", "json")
        assert code == 0
        data = json.loads(out)
        path = tmp_path / "mcq.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "axioms", "--mcq", str(path))
        assert code == 0
        code, out, _ = run(capsys, "maxdecomp", "--mcq", str(path), "--format", "json")
        assert code == 0
        tree = json.loads(out)
        assert tree["depth"] == 1
        assert sorted(len(b) for b in tree["carrier_blocks"]) == [6, 6]
        code, out, _ = run(capsys, "maxdecomp", "--assoc", "--dihedral", "6",
                           "--format", "json")
        assert json.loads(out) == tree


class TestTableLoading:
    def test_table_round_trip(self, capsys, tmp_path):
        q = conj_quandle(symmetric_group(3))
        path = tmp_path / "q.json"
        path.write_text(json.dumps(q.to_json()))
        code, out, _ = run(capsys, "components", "--table", str(path),
                           "--format", "json")
        assert code == 0
        assert sorted(len(b) for b in json.loads(out)["blocks"]) == [1, 2, 3]

    def test_invalid_table_refused_with_exit_3(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"size": 2, "table": [[1, 0], [1, 1]]}))
        code, _, err = run(capsys, "axioms", "--table", str(path))
        assert code == 3
        code, out, _ = run(capsys, "axioms", "--table", str(path), "--unchecked")
        assert code == 3  # axioms verb still reports the violation
        assert "idempotency" in out

    def test_unchecked_lets_components_run(self, capsys, tmp_path):
        q = dihedral(5).quandle
        path = tmp_path / "q.json"
        path.write_text(json.dumps(q.to_json()))
        code, _, _ = run(capsys, "components", "--table", str(path), "--unchecked")
        assert code == 0


class TestDeterminism:
    def test_identical_invocations_identical_output(self, capsys):
        _, out1, _ = run(capsys, "maxdecomp", "--alexander", "6; t^2+t+1")
        _, out2, _ = run(capsys, "maxdecomp", "--alexander", "6; t^2+t+1")
        assert out1 == out2

    def test_config_file_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"format": "json"}))
        code, out, _ = run(capsys, "--config", str(cfg), "prop56", "12", "1")
        assert code == 0
        assert json.loads(out)["block_count"] == 4


class TestVerify:
    def test_subset_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "six-cubic")
        assert code == 0
        assert "0 failure(s)" in out

    def test_tampered_expectation_fails_once(self, capsys, monkeypatch):
        import quandles.verify as V

        monkeypatch.setitem(V.EXPECTED, "conj-s4-final-sizes", (1, 1, 1, 1, 4, 4, 6, 7))
        code, out, _ = run(capsys, "verify", "--only", "conj-symmetric")
        assert code == 1
        lines = [line for line in out.splitlines() if line.startswith("FAIL")]
        assert len(lines) == 1
        assert "maximal block sizes" in lines[0]

    def test_json_mode(self, capsys):
        code, out, _ = run(capsys, "verify", "--only", "component-ideal",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["failures"] == 0
        assert all(row["ok"] for row in data["checks"])

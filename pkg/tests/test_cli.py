"""CLI surface: delegation, exit codes, schemas, determinism."""

import json
from pathlib import Path

import jsonschema
import pytest

from clasplab.cli import main
from clasplab.diagram import generate_trefoil, serialize

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def load_schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def registry_validate(payload, name):
    from referencing import Registry, Resource
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)
    validator = jsonschema.Draft202012Validator(load_schema(name),
                                                registry=registry)
    validator.validate(payload)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSubcommands:
    def test_rulings_trefoil(self, capsys):
        code, out, _ = run(capsys, "rulings", "--generate", "trefoil")
        assert code == 0
        assert out == "[[1],[3],[1,2,3]]\n"
        registry_validate(json.loads(out), "rulings")

    def test_obstruct_torus(self, capsys):
        code, out, _ = run(capsys, "obstruct", "--generate", "torus4",
                           "--n", "0")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "obstructed"
        registry_validate(payload, "verdict")

    def test_obstruct_trefoil_witness(self, capsys):
        code, out, _ = run(capsys, "obstruct", "--generate", "trefoil")
        payload = json.loads(out)
        assert payload["verdict"] == "not_obstructed"
        assert payload["witness"] == [1, 2, 3]

    def test_validate_bad_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.front"
        bad.write_text("rc 1\n")
        code, out, _ = run(capsys, "validate", "--input", str(bad))
        assert code == 1
        payload = json.loads(out)
        assert not payload["ok"]
        assert payload["violations"][0]["line"] == 1
        registry_validate(payload, "validation")

    def test_validate_generated(self, capsys):
        code, out, _ = run(capsys, "validate", "--generate", "unknot")
        assert code == 0
        assert json.loads(out)["ok"]

    def test_clasps_single_ruling(self, capsys):
        code, out, _ = run(capsys, "clasps", "--generate", "trefoil",
                           "--ruling", "[1,2,3]")
        payload = json.loads(out)
        assert payload["total"] == 0 and payload["parity"] == "even"
        registry_validate(payload, "clasp_report")

    def test_parity_lists_all_rulings(self, capsys):
        code, out, _ = run(capsys, "parity", "--generate", "trefoil")
        payload = json.loads(out)
        assert [row["parity"] for row in payload] == ["odd", "odd", "even"]

    def test_generate_braid(self, capsys):
        code, out, _ = run(capsys, "generate", "--generate", "braid",
                           "--strands", "2", "--word", "1,1,1")
        assert code == 0
        assert out.count("x 1") == 3

    def test_apply_script(self, capsys, tmp_path):
        script = tmp_path / "fill.moves"
        script.write_text("h0 1\nh1 1 @2\n")
        code, out, _ = run(capsys, "apply-script", "--script", str(script))
        assert code == 0
        payload = json.loads(out)
        assert payload["clasps"]["parity"] == "even"
        registry_validate(payload, "certificate")

    def test_search_unknot(self, capsys):
        code, out, _ = run(capsys, "search", "--generate", "unknot")
        payload = json.loads(out)
        assert payload["status"] == "found"
        registry_validate(payload, "search")

    def test_cobordism(self, capsys, tmp_path):
        lower = tmp_path / "a.front"
        lower.write_text(serialize(generate_trefoil()))
        code, out, _ = run(capsys, "cobordism", "--input", str(lower),
                           "--generate-upper", "unknot")
        payload = json.loads(out)
        assert payload["status"] == "not_applicable"
        registry_validate(payload, "parity_check")

    def test_render_svg(self, capsys):
        code, out, _ = run(capsys, "render", "--generate", "trefoil",
                           "--ruling", "[1]")
        assert code == 0
        assert out.startswith("<svg ")

    def test_render_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "--generate", "unknot",
                           "--style", "ascii")
        assert "<-->" in out


class TestErrorsAndDeterminism:
    def test_usage_error_exit_2(self, capsys):
        code, _, err = run(capsys, "rulings")
        assert code == 2
        assert "usage error" in err

    def test_mutually_exclusive_inputs(self, capsys, tmp_path):
        f = tmp_path / "d.front"
        f.write_text("lc 1\nrc 1\n")
        code, _, err = run(capsys, "rulings", "--input", str(f),
                           "--generate", "unknot")
        assert code == 2

    def test_domain_error_exit_1(self, capsys, tmp_path):
        f = tmp_path / "d.front"
        f.write_text("rc 1\n")
        code, _, err = run(capsys, "rulings", "--input", str(f))
        assert code == 1
        assert json.loads(err)["error"] == "InvalidDiagram"

    def test_parse_error_structured(self, capsys, tmp_path):
        f = tmp_path / "d.front"
        f.write_text("x zero\n")
        code, _, err = run(capsys, "validate", "--input", str(f))
        assert code == 1
        assert json.loads(err)["error"] == "ParseError"

    @pytest.mark.parametrize("argv", [
        ("rulings", "--generate", "trefoil"),
        ("clasps", "--generate", "trefoil"),
        ("obstruct", "--generate", "torus4", "--n", "1"),
        ("render", "--generate", "trefoil"),
        ("search", "--generate", "unknot", "--seed", "3"),
    ])
    def test_byte_identical_reruns(self, capsys, argv):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second

    def test_out_flag_writes_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run(capsys, "rulings", "--generate", "unknot",
                           "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text()) == [[]]

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "rulings", "--generate", "trefoil",
                           "--format", "text")
        assert out.splitlines() == ["{1}", "{3}", "{1,2,3}"]

    def test_budget_flag_exhausts(self, capsys):
        code, _, err = run(capsys, "rulings", "--generate", "trefoil",
                           "--budget", "3")
        assert code == 1
        assert json.loads(err)["error"] == "BudgetExceeded"

    def test_budget_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("CLASPLAB_BUDGET", "3")
        code, _, err = run(capsys, "rulings", "--generate", "trefoil")
        assert code == 1
        assert json.loads(err)["error"] == "BudgetExceeded"
        monkeypatch.setenv("CLASPLAB_BUDGET", "100000")
        code, out, _ = run(capsys, "rulings", "--generate", "trefoil")
        assert code == 0

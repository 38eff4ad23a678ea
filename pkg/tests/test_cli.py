import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from mzv.cli import main, parse_element
from mzv.operators import duality, partial
from mzv.poly import Poly
from mzv.words import word_from_letters

DOCS = Path(__file__).resolve().parent.parent / "docs"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_element_forms():
    assert parse_element("xxy") == Poly.from_word(word_from_letters("xxy"))
    assert parse_element("(2,1)") == Poly.from_word(word_from_letters("xyy"))
    assert parse_element("(1-tau)(xxy)") == \
        duality(Poly.from_word(word_from_letters("xxy")))
    assert parse_element("partial(2)(xy)") == \
        partial(2, Poly.from_word(word_from_letters("xy")))
    assert parse_element("(1-tau)((2,3))") == \
        duality(Poly.from_word(word_from_letters("xyxxy")))
    with pytest.raises(Exception):
        parse_element("shuffle(xy)")


def test_table_csv_weight8_column(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-weight", "8",
                           "--format", "csv")
    assert code == 0
    rows = [row for row in csv.reader(io.StringIO(out)) if row]
    assert rows[0] == ["row", "3", "4", "5", "6", "7", "8"]
    wt8 = [row[-1] for row in rows[1:]]
    assert wt8 == ["6", "15", "16", "28", "44", "46", "26"]


def test_table_json_schema_and_values(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    code, out, _ = run_cli(capsys, "table", "--max-weight", "6",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    schema = json.loads((DOCS / "table.schema.json").read_text())
    jsonschema.validate(payload, schema)
    row4 = next(r for r in payload["rows"] if r["id"] == 4)
    assert row4["values"] == {"3": 1, "4": 1, "5": 4, "6": 6}


def test_table_markdown_default(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-weight", "4")
    assert code == 0
    assert out.splitlines()[0].startswith("| wt |")


def test_member_true(capsys):
    code, out, _ = run_cli(capsys, "member",
                           "--element", "(1-tau)(xxyxy)",
                           "--family", "derivation", "--weight", "5")
    assert code == 0
    assert out.strip() == "true"


def test_member_false_sets_exit_code(capsys):
    code, out, _ = run_cli(capsys, "member", "--element", "xxy",
                           "--family", "derivation", "--weight", "3")
    assert code == 1
    assert out.strip() == "false"


def test_member_json(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    code, out, _ = run_cli(capsys, "member",
                           "--element", "(1-tau)(xxy)",
                           "--family", "duality", "--weight", "3",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    schema = json.loads((DOCS / "verdict.schema.json").read_text())
    jsonschema.validate(payload, schema)


def test_member_weight_mismatch_usage_error(capsys):
    code, _, err = run_cli(capsys, "member", "--element", "xxy",
                           "--family", "duality", "--weight", "4")
    assert code == 2
    assert "error" in err


def test_rank_command(capsys):
    code, out, _ = run_cli(capsys, "rank", "--family", "duality",
                           "--weight", "7")
    assert code == 0 and out.strip() == "16"
    code, out, _ = run_cli(capsys, "rank",
                           "--family", "union:duality,derivation",
                           "--weight", "8")
    assert code == 0 and out.strip() == "46"


def test_rank_unknown_family(capsys):
    code, _, err = run_cli(capsys, "rank", "--family", "stuffle",
                           "--weight", "5")
    assert code == 2


def test_verify_theorem_command(capsys):
    code, out, _ = run_cli(capsys, "verify-theorem", "--part", "i",
                           "--param", "1", "--cutoff", "6")
    assert code == 0
    assert "verified" in out


def test_verify_theorem_json_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    code, out, _ = run_cli(capsys, "verify-theorem", "--part", "ii",
                           "--param", "2", "--cutoff", "7",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True and payload["residual_terms"] == []
    schema = json.loads((DOCS / "verdict.schema.json").read_text())
    jsonschema.validate(payload, schema)


def test_conjecture_command_json(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    code, out, _ = run_cli(capsys, "conjecture", "--max-weight", "7",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_verified"] is True
    schema = json.loads((DOCS / "conjecture.schema.json").read_text())
    verdict = json.loads((DOCS / "verdict.schema.json").read_text())
    registry = referencing.Registry().with_resource(
        "verdict.schema.json",
        referencing.Resource.from_contents(
            verdict, default_specification=referencing.jsonschema.DRAFT7))
    jsonschema.validators.Draft7Validator(
        schema, registry=registry).validate(payload)


def test_numeric_relation(capsys):
    code, out, _ = run_cli(capsys, "numeric", "--element", "partial(1)(xy)",
                           "--terms", "100000", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["value"]) <= payload["tail_bound"]
    assert payload["verdict"] is True


def test_numeric_single_value(capsys):
    code, out, _ = run_cli(capsys, "numeric", "--element", "(2)",
                           "--terms", "10000", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == pytest.approx(1.6449, abs=1e-3)
    assert "verdict" not in payload


def test_numeric_bad_element(capsys):
    code, _, err = run_cli(capsys, "numeric", "--element", "(1,2)",
                           "--terms", "1000")
    assert code == 2 and "error" in err


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "table", "--max-weight", "4",
                           "--format", "json", "--out", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["max_weight"] == 4


def test_table_budget_skip_and_strict(capsys):
    code, out, err = run_cli(capsys, "table", "--max-weight", "9",
                             "--cell-budget", "1e-9", "--format", "csv")
    assert code == 0
    assert "skipped" in err
    code, _, _ = run_cli(capsys, "table", "--max-weight", "9",
                         "--cell-budget", "1e-9", "--strict")
    assert code == 1


def test_threads_flag_matches_serial(capsys):
    code1, out1, _ = run_cli(capsys, "table", "--max-weight", "6",
                             "--format", "csv")
    code2, out2, _ = run_cli(capsys, "table", "--max-weight", "6",
                             "--format", "csv", "--threads", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "mzv.cli", "rank",
                          "--family", "derivation", "--weight", "6"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "10"


def test_missing_subcommand_is_usage_error():
    out = subprocess.run([sys.executable, "-m", "mzv.cli"],
                         capture_output=True, text=True)
    assert out.returncode == 2

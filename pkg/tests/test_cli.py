import json
from importlib import resources

import jsonschema
import pytest

from fanojet.cli import run


@pytest.fixture(scope="module")
def schema():
    text = resources.files("fanojet").joinpath("report_schema.json").read_text()
    return json.loads(text)


def run_json(capsys, argv):
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def run_text(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


JSON_INVOCATIONS = [
    ["lines", "--ambient", "4", "--degrees", "5"],
    ["lines", "--ambient", "4", "--degrees", "3"],
    ["lines", "--ambient", "3", "--degrees", "4"],
    ["fano-ci", "--ambient", "4", "--degrees", "3"],
    ["fano-ci", "--ambient", "3"],
    ["fano-ci", "--ambient", "2", "--degrees", "2"],
    ["bounds", "--dim", "3", "--order", "2", "--degree", "7"],
    ["bounds", "--dim", "3", "--order", "2", "--degree", "16", "--h0", "11"],
    ["bounds", "--dim", "3", "--order", "2"],
    ["catalog"],
    ["catalog", "--k", "2"],
    ["catalog", "verify"],
    ["adjunction", "--dim", "4", "--order", "2"],
    ["chern", "--sym", "4"],
    ["chern", "--sym", "5", "--paper-formula"],
]


@pytest.mark.parametrize("argv", JSON_INVOCATIONS, ids=lambda a: " ".join(a))
def test_json_reports_validate_against_shipped_schema(capsys, schema, argv):
    code, report = run_json(capsys, argv)
    assert code == 0
    jsonschema.validate(report, schema)


def test_quintic_lines(capsys):
    code, report = run_json(capsys, ["lines", "--ambient", "4", "--degrees", "5"])
    assert code == 0
    assert report["result"]["line_count"] == {"kind": "finite", "count": "2875"}
    code, text = run_text(capsys, ["lines", "--ambient", "4", "--degrees", "5"])
    assert code == 0
    assert "2875" in text
    assert "generic" in text  # the genericity caveat


def test_text_and_json_carry_the_same_numbers(capsys):
    _, report = run_json(capsys, ["fano-ci", "--ambient", "5", "--degrees", "2,2"])
    _, text = run_text(capsys, ["fano-ci", "--ambient", "5", "--degrees", "2,2"])
    result = report["result"]
    assert result["jet_order"] == "2" and "2-jet ample" in text
    assert result["not_spanned_order"] == "3" and "not 3-spanned" in text
    assert result["anticanonical_degree"] == "32" and "= 32" in text


def test_fano_ci_text_output(capsys):
    code, text = run_text(capsys, ["fano-ci", "--ambient", "4", "--degrees", "3"])
    assert code == 0
    assert "2-jet ample, not 3-spanned" in text
    assert "contains a line: yes" in text


def test_bounds_failure_cites_the_degree_bound(capsys):
    code, report = run_json(capsys, ["bounds", "--dim", "3", "--order", "2", "--degree", "7"])
    assert code == 0  # a failed verdict is still a successful run
    assert report["result"]["ok"] is False
    assert report["result"]["degree_ok"] is False
    assert any("2^n + k - 2" in c for c in report["citations"])
    code, text = run_text(capsys, ["bounds", "--dim", "3", "--order", "2", "--degree", "7"])
    assert "FAIL" in text


def test_degree_order_never_matters(capsys):
    _, a = run_json(capsys, ["lines", "--ambient", "5", "--degrees", "2,4"])
    _, b = run_json(capsys, ["lines", "--ambient", "5", "--degrees", "4,2"])
    assert a["result"] == b["result"]


def test_catalog_listing(capsys):
    code, report = run_json(capsys, ["catalog"])
    assert code == 0
    assert report["result"]["count"] == "12"
    ids = [row["id"] for row in report["result"]["entries"]]
    assert ids[0] == "fano3-1" and "mukai-n5" in ids
    code, report = run_json(capsys, ["catalog", "--k", "4"])
    assert report["result"]["count"] == "1"
    assert report["result"]["entries"][0]["id"] == "fano3-5"
    code, report = run_json(capsys, ["catalog", "--dim", "4"])
    assert [row["id"] for row in report["result"]["entries"]] == ["mukai-n4"]


def test_catalog_verify(capsys):
    code, report = run_json(capsys, ["catalog", "verify"])
    assert code == 0
    assert report["result"] == {"checked": "12", "ok": True, "failures": []}
    code, text = run_text(capsys, ["catalog", "verify"])
    assert "12" in text and "consistent" in text


def test_adjunction_report(capsys):
    code, report = run_json(capsys, ["adjunction", "--dim", "3", "--order", "5"])
    assert code == 0
    assert [c["case_id"] for c in report["result"]["cases"]] == ["reduction"]


def test_chern_report_with_variant(capsys):
    code, report = run_json(capsys, ["chern", "--sym", "4", "--paper-formula"])
    assert code == 0
    assert report["result"]["top_chern"] == "96*c1^3*c2 + 128*c1*c2^2"
    alt = report["result"]["alternative"]
    assert alt["top_chern"] == "150*c1^3*c2 + 200*c1*c2^2"
    assert alt["ratio_to_canonical"] == "25/16"
    code, text = run_text(capsys, ["chern", "--sym", "4", "--paper-formula"])
    assert "25/16" in text


def test_chern_without_variant_has_no_alternative(capsys):
    _, report = run_json(capsys, ["chern", "--sym", "3"])
    assert "alternative" not in report["result"]
    assert report["result"]["top_chern"] == "18*c1^2*c2 + 9*c2^2"


@pytest.mark.parametrize(
    "argv",
    [
        ["lines", "--ambient", "4", "--degrees", "0"],
        ["lines", "--ambient", "4", "--degrees", "x"],
        ["lines", "--ambient", "4", "--degrees", ""],
        ["lines", "--ambient", "3", "--degrees", "2,2,2"],  # r >= N
        ["fano-ci", "--ambient", "2", "--degrees", "2,2"],
        ["bounds", "--dim", "3", "--order", "1", "--degree", "9"],
        ["bounds", "--dim", "3", "--order", "2", "--h0", "9"],
        ["adjunction", "--dim", "2", "--order", "2"],
        ["chern", "--sym", "0"],
    ],
    ids=lambda a: " ".join(a),
)
def test_input_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    err = capsys.readouterr().err
    assert "error" in err.lower()


def test_unknown_subcommand_exits_2(capsys):
    assert run(["frobnicate"]) == 2


def test_missing_required_flag_exits_2(capsys):
    assert run(["lines", "--ambient", "4"]) == 2

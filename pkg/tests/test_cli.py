import json
import time

import pytest

from main import run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_group_json(capsys):
    assert run(["group", "B3"]) == 0
    data = _json(capsys)
    assert data["order"] == 48
    assert data["rank"] == 3
    assert data["coxeter_matrix"] == [[1, 4, 2], [4, 1, 3], [2, 3, 1]]
    assert data["model"] == "signed_permutation"
    assert len(data["generators"]) == 3
    assert data["enumerable"] is True


def test_group_dihedral(capsys):
    assert run(["group", "I2:7"]) == 0
    data = _json(capsys)
    assert data["order"] == 14
    assert data["aliases"] == []


def test_group_refuses_to_enumerate_e8(capsys):
    assert run(["group", "E8", "--cap", "1000000"]) == 0
    data = _json(capsys)
    assert data["order"] == 696729600
    assert data["enumerable"] is False
    assert data["note"].startswith("enumeration disabled")


def test_group_text_and_csv(capsys):
    assert run(["group", "A2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "type: A2 (= I2:3)" in out
    assert "order: 6" in out
    assert run(["group", "B3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "s,s1,s2,s3"
    assert lines[1] == "s1,1,4,2"


def test_transversal_text(capsys):
    assert run(["transversal", "A2", "1", "--format", "text"]) == 0
    assert capsys.readouterr().out == "\n2\n1 2\n"


def test_double_transversal(capsys):
    assert run(["transversal", "B3", "1,2", "1,2"]) == 0
    data = _json(capsys)
    assert data["kind"] == "double"
    assert data["size"] == 3
    assert data["elements"][0] == ""


def test_product(capsys):
    assert run(["product", "A2", "1", "1"]) == 0
    assert _json(capsys)["product"] == {"-": "1", "1": "1"}
    assert run(["product", "B3", "1,3", "1,3", "--format", "text"]) == 0
    assert capsys.readouterr().out == "x_1,3 * x_1,3 = 2*x[-] + x[1] + 2*x[1,3]\n"


def test_analyze_native_non_integral(capsys):
    assert run(["analyze", "B3", "2"]) == 0
    data = _json(capsys)
    assert data["native"] is True
    assert data["integral"] is False
    assert data["matches"] is True
    assert data["native_basis"] == ["-", "1", "1,3", "1,2,3"]
    assert data["witness"] is None


def test_analyze_without_native_basis(capsys):
    assert run(["analyze", "A4", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "native basis: no" in out
    assert "witness: t = s" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["group", "D2"],
        ["analyze", "B3", "4"],
        ["transversal", "A3", "1,7"],
        ["table", "H3"],
        ["product", "A3", "1"],
        ["reproduce", "nope"],
        ["group", "A3", "--cap", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_cap_exceeded(capsys):
    assert run(["analyze", "H3", "1", "--cap", "10"]) == 3
    assert "enumeration cap" in capsys.readouterr().err


def test_table(capsys):
    assert run(["table", "B2"]) == 0
    closed = capsys.readouterr().out
    lines = closed.splitlines()
    assert lines[0] == "j,0,1,2"
    assert lines[2] == "1,0:4,0:1;1:2,1:1"
    assert run(["table", "B2", "--brute-force"]) == 0
    assert capsys.readouterr().out == closed


def test_table_json_and_text(capsys):
    assert run(["table", "B2", "--format", "json"]) == 0
    data = _json(capsys)
    assert data["source"] == "closed_form"
    assert data["indices"] == [0, 1, 2]
    assert data["products"]["1"]["0"] == {"0": "4"}
    assert data["products"]["1"]["1"] == {"0": "1", "1": "2"}
    assert run(["table", "B2", "--format", "text"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9
    assert "x_1 * x_0 = 4*x_0" in lines
    assert "x_1 * x_1 = x_0 + 2*x_1" in lines


def test_output_is_deterministic(capsys):
    run(["transversal", "H3", "1,2", "--format", "csv"])
    first = capsys.readouterr().out
    run(["transversal", "H3", "1,2", "--format", "csv"])
    assert capsys.readouterr().out == first
    assert first.splitlines()[0] == "index,word,length"
    assert len(first.splitlines()) == 1 + 12


def test_out_file(tmp_path, capsys):
    target = tmp_path / "product.json"
    assert run(["product", "A3", "1", "2", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["type"] == "A3"


def test_reproduce(tmp_path, capsys):
    assert run(["reproduce", "example_b3", "--out", str(tmp_path)]) == 0
    data = _json(capsys)
    assert data["passed"] is True
    assert (tmp_path / "reproduce_example_b3.json").exists()
    assert run(["reproduce", "table1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "suite,anchor,status"
    assert len(lines) == 12


@pytest.mark.parametrize("argv", [["product", "E8", "1", "-"], ["transversal", "E8", "-"]])
def test_oversized_e8_transversal_is_refused_at_once(argv, monkeypatch, capsys):
    monkeypatch.delenv("COXETER_ENUMERATION_CAP", raising=False)
    monkeypatch.setattr("coxeter_descent.utils.config.load_dotenv", lambda *a, **k: False)
    started = time.perf_counter()
    assert run(argv) == 3
    assert time.perf_counter() - started < 30
    assert "696729600 elements exceed the enumeration cap 10000000" in capsys.readouterr().err

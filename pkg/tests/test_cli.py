import json

import pytest

from arlideals.cli import main, run
from arlideals.ideal import MonomialIdeal
from arlideals.sequences import HilbertSeq
from helpers import MISSING_Y3Z3, INFINITE_INDEX, THREE_VAR, FROBERG_335, NON_ARL


def _ideal_file(tmp_path, ideal, name="ideal.json"):
    path = tmp_path / name
    path.write_text(json.dumps(ideal.to_json()))
    return str(path)


def _json(argv, stdin=None):
    code, out, err = run(argv, stdin)
    return code, (json.loads(out) if out else None), err


def test_synthesize_example():
    code, data, _ = _json(["synthesize", "--sequence", "1,2,3,2,1,0", "--tail", "zero"])
    assert code == 0
    assert data["generators"] == [[3, 0], [2, 1], [1, 3], [0, 5]]


def test_froberg_example():
    code, data, _ = _json(["froberg", "--n", "3", "--degrees", "3,3,5", "--max-degree", "9"])
    assert code == 0
    assert data["values"] == [1, 3, 6, 8, 9, 8, 6, 3, 1, 0]
    assert data["tail"] == {"kind": "FiniteSupport", "t": 9}


def test_froberg_ideal_example():
    code, data, _ = _json(["froberg-ideal", "--n", "3", "--degrees", "3,3,5", "--trace"])
    assert code == 0
    assert MonomialIdeal.from_json(data) == FROBERG_335
    assert "trace" in data


def test_check_arl_ideal(tmp_path):
    code, data, _ = _json(["check", "--ideal", _ideal_file(tmp_path, THREE_VAR), "--mode", "both"])
    assert code == 0
    assert data["is_arl"] and data["definition"] and data["criterion"]


def test_check_seven_generator_ideal_reports_not_arl(tmp_path):
    code, data, _ = _json(["check", "--ideal", _ideal_file(tmp_path, MISSING_Y3Z3)])
    assert code == 1
    assert data["witness"]["definition"] == {"M": [0, 3, 4], "N": [2, 0, 5]}


def test_check_non_arl(tmp_path):
    path = _ideal_file(tmp_path, NON_ARL)
    code, data, _ = _json(["check", "--ideal", path, "--mode", "definition"])
    assert (code, data["is_arl"], data["witness"]) == (1, False, {"M": [0, 4, 1], "N": [1, 2, 2]})
    code, data, _ = _json(["check", "--ideal", path, "--mode", "criterion"])
    assert code == 1
    assert data["witness"] == {"i": 2, "alpha": [0, 4], "beta": [1, 2], "alpha_value": 6, "beta_value": 5}


def test_check_hypothesis_failure(tmp_path):
    code, out, err = run(["check", "--ideal", _ideal_file(tmp_path, INFINITE_INDEX), "--mode", "criterion"])
    assert code == 2 and out == ""
    assert "I_2 is infinite" in err


def test_check_from_stdin():
    code, data, _ = _json(["check", "--ideal", "-"], json.dumps(THREE_VAR.to_json()))
    assert code == 0 and data["is_arl"]


def test_hilbert_command(tmp_path):
    code, data, _ = _json(["hilbert", "--ideal", _ideal_file(tmp_path, FROBERG_335), "--max-degree", "10"])
    assert code == 0
    assert data == {"values": [1, 3, 6, 8, 9, 8, 6, 3, 1, 0, 0], "max_degree": 10, "stabilized": None}


def test_gens_command(tmp_path):
    code, data, _ = _json(["gens", "--ideal", _ideal_file(tmp_path, MISSING_Y3Z3)])
    assert code == 0
    assert data["last_generator"] == {"monomial": [2, 0, 5], "mu": 3}
    assert data["index_sets"][1]["tuples"] == [[0, 4], [1, 2], [0, 3], [2, 0]]
    assert data["index_sets"][1]["f_next"] == [2, 3, "inf", 5]


def test_validate_sequence():
    code, data, _ = _json(["validate", "--sequence", "1,3,6,8,9,9,6,5", "--tail", "constant:5"])
    assert code == 0
    assert (data["r"][0], data["depth"], data["unimodal_at_each_tail"]) == (5, 0, True)
    code, data, _ = _json(["validate", "--sequence", "1,2,1,2", "--tail", "constant:2"])
    assert code == 1
    assert data["witness"] == {"i": 0, "d": 3}


def test_validate_ideal(tmp_path):
    path = tmp_path / "i.json"
    path.write_text(json.dumps({"n": 2, "generators": ["x2^5", "x1^3", [2, 1], [1, 3], [2, 2]]}))
    code, data, _ = _json(["validate", "--ideal", str(path)])
    assert code == 0
    assert data["canonical"] is False
    assert data["ideal"]["generators"] == [[3, 0], [2, 1], [1, 3], [0, 5]]


def test_synthesize_not_unimodal():
    code, data, err = _json(["synthesize", "--sequence", "1,2,1,2", "--tail", "constant:2"])
    assert code == 1
    assert data == {"unimodal_at_each_tail": False, "witness": {"i": 0, "d": 3}}
    assert "not unimodal" in err


def test_synthesize_json_stdin_and_trace():
    h = HilbertSeq((1, 3, 6, 8, 9, 9, 6, 5))
    code, data, _ = _json(["synthesize", "--sequence", "-", "--trace"], json.dumps(h.to_json()))
    assert code == 0
    steps = data["trace"]["levels"][-1]["steps"]
    assert [s["d"] for s in steps][0] == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["synthesize", "--sequence", "2,1"],
        ["synthesize", "--sequence", "1,x"],
        ["synthesize", "--sequence", "1,2", "--tail", "sometimes"],
        ["froberg", "--n", "2", "--degrees", "0"],
        ["froberg", "--n", "-1"],
        ["check", "--ideal", "/nonexistent/file.json"],
        ["hilbert"],
        ["nonsense"],
    ],
)
def test_invalid_input_exits_2(argv):
    code, out, _ = run(argv)
    assert code == 2
    assert out == ""


def test_bad_ideal_json():
    assert run(["check", "--ideal", "-"], "{not json")[0] == 2
    assert run(["check", "--ideal", "-"], json.dumps({"n": 3, "generators": [[1, 2]]}))[0] == 2
    assert run(["check", "--ideal", "-"], json.dumps([1, 2]))[0] == 2


def test_text_format_matches_json(tmp_path):
    path = _ideal_file(tmp_path, NON_ARL)
    _, text, _ = run(["check", "--ideal", path, "--format", "text"])
    assert "x2^4*x3 > x1*x2^2*x3^2" in text
    assert "is_arl: false" in text
    _, text, _ = run(["synthesize", "--sequence", "1,2,3,2,1,0", "--format", "text", "--trace"])
    assert "x1^3, x1^2*x2, x1*x2^3, x2^5" in text
    assert "d=3 t=1" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["froberg", "--n", "3", "--degrees", "3,3,5"],
        ["froberg-ideal", "--n", "2", "--degrees", "2,3", "--trace"],
        ["synthesize", "--sequence", "1,3,6,8,9,9,6,5", "--tail", "constant:5", "--trace"],
        ["validate", "--sequence", "1,2,3,2,1,0"],
    ],
)
def test_output_is_deterministic_and_reparses(argv):
    code, out, _ = run(argv)
    assert code == 0
    assert run(argv)[1] == out
    data = json.loads(out)
    assert json.loads(json.dumps(data)) == data
    if "generators" in data:
        assert MonomialIdeal.from_json(data).to_json() == {"n": data["n"], "generators": data["generators"]}
    if "sequence" in data:
        assert HilbertSeq.from_json(data["sequence"]).to_json() == data["sequence"]


def test_main_entry_point(capsys):
    assert main(["froberg", "--n", "2", "--degrees", "3", "--max-degree", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == [1, 2, 3, 3, 3]

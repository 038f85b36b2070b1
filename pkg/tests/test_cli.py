import json

import pytest

from simplegames.cli import EXIT_INVALID, EXIT_OK, EXIT_RESOURCE, run


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


PAIRS = {"n": 4, "form": "min_winning", "coalitions": [[1, 2], [3, 4]]}
MAJORITY = {"n": 3, "form": "min_winning", "coalitions": [[1, 2], [1, 3], [2, 3]]}


def test_check_weighted_certificate(tmp_path, capsys):
    code, out, _ = call(capsys, "check", write(tmp_path, "g.json", PAIRS), "--property", "weighted")
    assert code == EXIT_OK
    assert out["command"] == "check" and out["verdict"] is False
    cert = out["certificate"]
    assert cert["status"] == "infeasible"
    used = {row["constraint"]: row["multiplier"] for row in cert["certificate"]}
    assert used == {"winning [1, 2]: w(S) >= q": "-1", "winning [3, 4]: w(S) >= q": "-1",
                    "losing [1, 3]: w(S) <= q - 1": "1", "losing [2, 4]: w(S) <= q - 1": "1"}
    assert out["timing"] is None


def test_check_weighted_realization(tmp_path, capsys):
    code, out, _ = call(capsys, "check", write(tmp_path, "g.json", MAJORITY), "--property", "weighted")
    assert code == EXIT_OK and out["verdict"] is True
    assert out["realization"] == {"quota": 2, "weights": [1, 1, 1]}


@pytest.mark.parametrize("prop, expected", [
    ("simple", True), ("strong", True), ("proper", True), ("decisive", True),
    ("majority", True), ("homogeneous", True),
])
def test_check_properties_of_majority(tmp_path, capsys, prop, expected):
    code, out, _ = call(capsys, "check", write(tmp_path, "g.json", MAJORITY), "--property", prop)
    assert code == EXIT_OK and out["verdict"] is expected and out["method"]


def test_check_strong_witness(tmp_path, capsys):
    code, out, _ = call(capsys, "check", write(tmp_path, "g.json", PAIRS), "--property", "strong")
    assert code == EXIT_OK and out["verdict"] is False
    a, b = out["witness"]
    assert not set(a) & set(b)


def test_check_succinct(tmp_path, capsys):
    doc = {"n": 2, "form": "winning", "formula": ["and", 1, ["not", 2]]}
    code, out, _ = call(capsys, "check", write(tmp_path, "f.json", doc), "--property", "simple", "--succinct")
    assert code == EXIT_OK and out["verdict"] is False
    assert out["witness"] == [[1, 0], [1, 1]]
    doc = {"n": 2, "form": "winning", "formula": ["and", 1, 2]}
    code, out, _ = call(capsys, "check", write(tmp_path, "f.json", doc), "--property", "strong", "--succinct")
    assert code == EXIT_OK and out["verdict"] is False


def test_realization(tmp_path, capsys):
    path = write(tmp_path, "r.json", {"quota": 2, "weights": [1, 1, 1]})
    code, out, _ = call(capsys, "realization", path, "--check", "majority")
    assert code == EXIT_OK and out["verdict"] is True
    path = write(tmp_path, "r.json", {"quota": 3, "weights": [2, 2, 1]})
    code, out, _ = call(capsys, "realization", path, "--check", "homogeneous-realization")
    assert out["verdict"] is False and out["witness"]


def test_convert_and_dual(tmp_path, capsys):
    code, out, _ = call(capsys, "generate", "lemma5", "--size", "3")
    path = write(tmp_path, "g.json", out)
    code, out, _ = call(capsys, "convert", path, "--to", "lm")
    assert code == EXIT_OK and out["size"] == 8 and out["game"]["form"] == "max_losing"
    code, out, _ = call(capsys, "dual", write(tmp_path, "m.json", MAJORITY))
    assert out["game"] == {"n": 3, "form": "max_losing", "coalitions": [[1], [2], [3]]}


@pytest.mark.parametrize("doc", [
    {"n": 2, "form": "winning", "coalitions": [[1]]},
    {"n": 2, "form": "winning", "coalitions": [[2, 1]]},
    {"n": 2, "form": "bogus", "coalitions": []},
    {"n": 2, "form": "winning"},
    {"n": 2, "form": "min_winning", "coalitions": [[3]]},
])
def test_invalid_input_exits_1(tmp_path, capsys, doc):
    code, out, err = call(capsys, "check", write(tmp_path, "g.json", doc), "--property", "strong")
    assert code == EXIT_INVALID and out is None and err


def test_unreadable_file_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call(capsys, "check", str(bad), "--property", "strong")[0] == EXIT_INVALID
    assert call(capsys, "check", str(tmp_path / "missing.json"), "--property", "strong")[0] == EXIT_INVALID


def test_guard_exits_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SG_MAX_ENUM_N", "3")
    code, out, err = call(capsys, "check", write(tmp_path, "g.json", PAIRS), "--property", "strong")
    assert code == EXIT_RESOURCE and out is None and "SG_MAX_ENUM_N" in err


def test_output_is_byte_identical(tmp_path, capsys):
    path = write(tmp_path, "g.json", PAIRS)
    outputs = set()
    for _ in range(3):
        run(["check", path, "--property", "weighted"])
        outputs.add(capsys.readouterr().out)
    assert len(outputs) == 1


def test_timing_is_opt_in(tmp_path, capsys):
    code, out, _ = call(capsys, "--timing", "check", write(tmp_path, "g.json", MAJORITY), "--property", "strong")
    assert isinstance(out["timing"], float)


@pytest.mark.parametrize("kind", ["partition", "setsplit", "sat", "lemma5"])
def test_generate_feeds_back(tmp_path, capsys, kind):
    code, gen, _ = call(capsys, "generate", kind, "--seed", "3")
    assert code == EXIT_OK
    again = call(capsys, "generate", kind, "--seed", "3")[1]
    assert again == gen
    path = write(tmp_path, "inst.json", gen)
    if kind == "partition":
        code, out, _ = call(capsys, "realization", path, "--check", "strong")
        assert out["verdict"] is (not gen["source"]["partition_exists"])
    elif kind == "setsplit":
        code, out, _ = call(capsys, "check", path, "--property", "strong")
        assert out["verdict"] is (not gen["source"]["splitting_exists"])
    elif kind == "sat":
        code, out, _ = call(capsys, "check", path, "--property", "simple", "--succinct")
        assert out["verdict"] is (not gen["source"]["satisfiable"])
    else:
        code, out, _ = call(capsys, "check", path, "--property", "simple")
        assert out["verdict"] is True
    assert code == EXIT_OK


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "-n", "3")
    assert code == EXIT_OK and out["count"] == 18 == len(out["games"])
    code, out, _ = call(capsys, "enumerate", "-n", "3", "--cross-validate")
    assert out["verdict"] is True and out["count"] == out["independent_count"] == 18
    assert out["disagreements"] == []
    assert call(capsys, "enumerate", "-n", "5")[0] == EXIT_RESOURCE

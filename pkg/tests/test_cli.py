import io
import json
import os

import pytest

from monogp.cli import run

DATA = os.path.join(os.path.dirname(__file__), "..", "demos", "data")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def data(name):
    return os.path.join(DATA, name)


def test_classify_json_z2():
    code, out, _ = call("classify", data("z2_babaa.alg"), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == doc["basis_size"] == 9
    assert doc["relations_F"] == ["a b a b"]
    assert [(p["path"], len(p["cycle"])) for p in doc["perfect_paths"]] == [("a b", 1)]
    assert doc["perfect_paths"][0]["dim_vector"] == {"1": 1, "2": 1}
    assert doc["perfect_paths"][0]["top"] == "1"


def test_quadratic_report_text():
    code, out, _ = call("quadratic", data("gentle.alg"))
    assert code == 0
    assert "Gorenstein: yes" in out
    assert "self-injective dimension at most: 3" in out
    assert "CM-free: no" in out


def test_quadratic_json_and_dot():
    code, out, _ = call("quadratic", data("gentle.alg"), "--json")
    g = json.loads(out)["gorenstein"]
    assert g == {"verdict": True, "bound": 3, "cm_free": False, "finite_gldim": False}
    code, out, _ = call("quadratic", data("gentle.alg"), "--dot")
    assert code == 0 and out.startswith("digraph") and '"a" -> "b"' in out


def test_stable_json():
    _, out, _ = call("stable", data("gentle.alg"), "--json")
    doc = json.loads(out)
    assert doc["overlaps"] == []
    assert doc["stable"] == {"cycle_lengths": [2], "semisimple": True}


def test_nakayama_from_kupisch_and_file():
    code, out, _ = call("nakayama", "--kupisch", "2,3", "--json")
    assert code == 0
    nak = json.loads(out)["nakayama"]
    assert nak == {"c": [2, 3], "theta": [1, 1], "black": [1], "theta_cyclically_black": [1]}
    _, out, _ = call("nakayama", data("z2_babaa.alg"), "--json")
    assert json.loads(out)["nakayama"]["c"] == [4, 5]


def test_info_text():
    code, out, _ = call("info", data("three_vertex.alg"))
    assert code == 0 and "dimension: 7" in out


def test_paths_as_arrows():
    _, out, _ = call("classify", data("z2_babaa.alg"), "--json", "--paths-as-arrows")
    assert json.loads(out)["perfect_paths"][0]["path"] == "ab"
    code, _, err = call("nakayama", "--kupisch", "2,2", "--paths-as-arrows")
    assert code == 2 and "single-character" in err


def test_verify_agrees():
    code, out, _ = call("verify", "--seed", "7", "--count", "40", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["mismatches"] == [] and doc["paths_checked"] > 0


def test_verify_parallel_output_is_identical():
    _, one, _ = call("verify", "--seed", "3", "--count", "12", "--json")
    _, two, _ = call("verify", "--seed", "3", "--count", "12", "--json", "--jobs", "2")
    assert one == two


def test_gen_round_trips(tmp_path):
    code, out, _ = call("gen", "--seed", "5", "--quadratic")
    assert code == 0
    path = tmp_path / "g.alg"
    path.write_text(out)
    code, _, _ = call("info", str(path))
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "/nonexistent.alg"],
        ["quadratic", "DATA:z2_babaa.alg"],
        ["nakayama", "DATA:three_vertex.alg"],
        ["nakayama", "--kupisch", "2,x"],
        ["nakayama", "--kupisch", "5,2"],
        ["bogus"],
        ["verify", "--quadratic", "--nakayama"],
    ],
)
def test_usage_errors_exit_2(argv):
    argv = [data(a[5:]) if a.startswith("DATA:") else a for a in argv]
    code, _, _ = call(*argv)
    assert code == 2


def test_parse_error_reports_position(tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("vertices: 1 2\narrow a: 1 -> 2\nrelation: a a\n")
    code, _, err = call("classify", str(path))
    assert code == 2 and ":3:13:" in err


def test_verify_mismatch_exits_1(monkeypatch):
    import monogp.cli as cli

    monkeypatch.setattr(cli, "gp_oracle", lambda A, p: "NotGP")
    code, out, _ = call("verify", "--seed", "7", "--count", "5")
    assert code == 1 and "mismatches: 0" not in out

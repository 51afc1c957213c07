import json

import pytest

from dessinlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_unicellular_count(capsys):
    code, out, _ = run(capsys, "unicellular", "count", "--ell", "15")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "unicellular count"
    assert payload["result"]["ell"] == 15 and payload["result"]["total"] == 15


def test_psi(capsys):
    code, out, _ = run(capsys, "sl2", "psi", "--n", "5", "--p-max", "19")
    result = json.loads(out)["result"]
    assert code == 0
    assert result["coefficients"] == [5, 5, 1]
    assert result["roots"] == [{"p": 11, "i": [1, 5]}, {"p": 19, "i": [2, 12]}]


def test_quaternion_classify(capsys):
    code, out, _ = run(capsys, "quotient", "classify", "--group", "quaternion:8",
                       "--b", "xy", "--w", "y^-1", "--by", "center")
    result = json.loads(out)["result"]
    assert code == 0
    assert result["covering"]["totally_branched"]
    assert result["covering"]["ram_points"] == 6
    assert result["quotient_theorem"] is True


def test_rationals_are_strings(capsys):
    _, out, _ = run(capsys, "quotient", "classify", "--group", "quaternion:16",
                    "--b", "xy", "--w", "y^-1", "--by", "cyclic:x^4")
    ratio = json.loads(out)["result"]["covering"]["ratio"]
    assert ratio == "-3/1"
    assert "." not in out.replace('"', "")


@pytest.mark.parametrize("argv,code", [
    (["dessin", "info", "--group", "quaterion:8", "--b", "x", "--w", "y"], 2),
    (["dessin", "info", "--group", "quaternion:8", "--b", "xz", "--w", "y"], 2),
    (["sl2", "fibonacci", "--p", "7,x"], 2),
    (["dessin", "info", "--group", "quaternion:8", "--b", "x", "--w", "x"], 3),
    (["sl2", "schur", "--q", "9", "--triple", "3,5,5"], 3),
    (["construct", "ha", "--p", "5", "--d", "1", "--ell", "4", "--i", "1", "--j", "2"], 3),
    (["quotient", "classify", "--group", "quaternion:8", "--b", "x", "--w", "y",
      "--by", "cyclic:y"], 3),
    (["dessin", "info", "--group", "sl2:13", "--b", "L", "--w", "U", "--cap", "500"], 4),
])
def test_exit_codes_and_error_objects(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    error = json.loads(err)["error"]
    assert error["exit_code"] == code
    if code == 2:
        assert "offset" in error


def test_deterministic_and_parallel_output(capsys):
    _, first, _ = run(capsys, "unicellular", "identity", "--ell", "1-40")
    _, second, _ = run(capsys, "unicellular", "identity", "--ell", "1-40")
    _, parallel, _ = run(capsys, "unicellular", "identity", "--ell", "1-40", "--jobs", "2")
    assert first == second == parallel


def test_csv_table(capsys):
    code, out, _ = run(capsys, "sl2", "orders", "--p", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["p,i,order,smooth", "5,1,10,false", "5,2,3,true",
                                "5,3,4,false", "5,4,6,false"]


def test_fibonacci_csv(capsys):
    _, out, _ = run(capsys, "sl2", "fibonacci", "--p", "101,41", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "p,p_mod_20,order,smooth,class"
    assert lines[1].startswith("101,1,25,true")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "enum.json"
    code, out, _ = run(capsys, "unicellular", "enumerate", "--ell", "6", "--out", str(target))
    assert code == 0 and out == ""
    rows = json.loads(target.read_text())["result"]
    assert [r["k"] for r in rows] == list(range(6))


def test_constructions(capsys):
    _, out, _ = run(capsys, "construct", "ha", "--p", "5", "--d", "1", "--ell", "4",
                    "--i", "1", "--j", "3")
    result = json.loads(out)["result"]
    assert result["dessin"]["signature"] == [4, 2, 4]
    assert result["covering"]["smooth"]
    _, out, _ = run(capsys, "construct", "tw", "--k", "5")
    assert json.loads(out)["result"]["dessin"]["chi"] == -2 * 60**5
    _, out, _ = run(capsys, "construct", "pa", "--k", "2", "--a", "(0,1,2)")
    assert json.loads(out)["result"]["checks"]["closure_order"] == 7200


def test_criterion_with_oracle(capsys):
    code, out, _ = run(capsys, "sl2", "criterion", "--q", "9", "--triple", "3,5,5", "--oracle")
    result = json.loads(out)["result"]
    assert code == 0 and result["criterion"] is False and result["oracle"] is False


def test_dessin_info_faces(capsys):
    _, out, _ = run(capsys, "dessin", "info", "--group", "cyclic:5", "--b", "h^2",
                    "--w", "h^4", "--faces")
    result = json.loads(out)["result"]
    assert result["unicellular"] and len(result["faces"]) == 1


def test_verify_single_criterion(capsys):
    code, out, _ = run(capsys, "verify", "all", "--id", "2", "--id", "7")
    result = json.loads(out)["result"]
    assert code == 0 and result["passed"]
    assert [c["id"] for c in result["criteria"]] == [2, 7]
    code, _, err = run(capsys, "verify", "all", "--id", "13")
    assert code == 3

import io
import json

import pytest

from agdecode.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_bench_example4():
    code, out = run(["bench", "example4", "--curve", "klein.json"])
    assert code == 0
    for s in ("2392", "2399", "17220", "28,038,433,500", "743,532,706,125"):
        assert s in out
    data = json.loads(out[out.index("{"):])
    assert data["bound"]["alternate"] == 28038433500


def test_curve_info_and_validate(capsys):
    code, out = run(["curve-info", "--curve", "klein.json"])
    assert code == 0 and "y_1: x3" in out and "genus: 3" in out
    code, out = run(["validate", "--curve", "hermitian4.json"])
    assert code == 0 and "8 places" in out


def test_encode_corrupt_decode():
    code, word = run(["encode", "--curve", "hermitian4.json", "--u", "4", "--msg", "1,2,3,0"])
    assert code == 0
    word = word.strip()
    code, bad = run(["corrupt", "--curve", "hermitian4.json", "--word", word, "--errors", "1",
                     "--seed", "3"])
    bad = bad.strip()
    assert sum(a != b for a, b in zip(word.split(","), bad.split(","))) == 1
    code, out = run(["decode", "--curve", "hermitian4.json", "--u", "4", "--m", "2",
                     "--received", bad])
    assert code == 0
    rep = json.loads(out)
    assert [1, 2, 3, 0] in [c["message"] for c in rep["candidates"]]
    code, out = run(["decode", "--curve", "hermitian4.json", "--u", "4", "--m", "1",
                     "--received", word])
    assert json.loads(out)["candidates"][0]["distance"] == 0


def test_interpolate_output():
    code, out = run(["interpolate", "--curve", "hermitian4.json", "--u", "4", "--m", "2",
                     "--ell", "2", "--received", "1,2,2,2,3,0,1,2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("Z^0 : ")
    assert "weight: 11" in lines and lines[-1].startswith("multiplications: ")


def test_decode_random_trial_deterministic():
    argv = ["decode", "--curve", "klein.json", "--u", "12", "--m", "2", "--seed", "9",
            "--verify-only"]
    c1, o1 = run(argv)
    c2, o2 = run(argv)
    assert c1 == 0 and o1 == o2
    rep = json.loads(o1)
    assert rep["mode"] == "verify"
    assert rep["sent"] in [c["message"] for c in rep["candidates"]]


def test_selftest():
    code, out = run(["selftest"])
    assert code == 0 and "0 failed" in out


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["encode", "--curve", "klein.json"],
    ["encode", "--curve", "klein.json", "--u", "12", "--msg", "a,b"],
    ["decode", "--curve", "klein.json", "--u", "12", "--m", "1", "--tau", "2", "--received", "0"],
    ["decode", "--curve", "hermitian4.json", "--u", "4", "--m", "1"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 1


@pytest.mark.parametrize("argv", [
    ["validate", "--curve", "/nonexistent.json"],
    ["encode", "--curve", "klein.json", "--u", "12", "--msg", "1,2"],
    ["encode", "--curve", "hermitian4.json", "--u", "4", "--msg", "1,2,3,9"],
    ["interpolate", "--curve", "hermitian4.json", "--u", "4", "--m", "3", "--ell", "2",
     "--received", "0,0,0,0,0,0,0,0"],
    ["decode", "--curve", "hermitian4.json", "--u", "4", "--tau", "7", "--received",
     "0,0,0,0,0,0,0,0"],
])
def test_domain_errors(argv):
    assert run(argv)[0] == 2


def test_invalid_curve_file(tmp_path, capsys):
    from importlib import resources
    d = json.loads(resources.files("agdecode").joinpath("curves", "klein.json").read_text())
    d["f"] = [{"e": [8, 0, 0], "c": 1}, {"e": [1, 0, 0], "c": 1}]
    d["genus"] = 5
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    assert run(["validate", "--curve", str(p)])[0] == 2
    err = capsys.readouterr().err
    assert "[genus]" in err
    d["genus"] = 3
    p.write_text(json.dumps(d))
    assert run(["validate", "--curve", str(p)])[0] == 2
    assert "Assumption 1" in capsys.readouterr().err
    p.write_text("{not json")
    assert run(["validate", "--curve", str(p)])[0] == 2

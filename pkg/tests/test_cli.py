import json
import shutil
import subprocess
import sys

import pytest

from johnsonkit.cli import main


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def gen(capsys, tmp_path, *argv):
    code, data = run(capsys, "gen", *argv)
    assert code == 0
    path = tmp_path / f"{argv[0]}.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_orbit_nonsep(capsys):
    code, out = run(capsys, "orbit", "nonsep", "--genus", "2", "--gamma", "x1 x2 x1^-1 x2^-1 x3", "--delta", "x3")
    assert code == 0 and out["verdict"] == "NotEquivalent"
    assert out["class"] == {"degree": 2, "terms": [["[x1,x2]", 1]]}
    assert out["conventions"]["basis"] == ["x1", "x2", "x3", "x4"]


def test_orbit_sep(capsys):
    code, out = run(capsys, "orbit", "sep", "--genus", "2", "--gamma", "x1 x2 x1^-1 x2^-1",
                    "--delta", "x3 x1 x2 x1^-1 x2^-1 x3^-1")
    assert code == 0 and out["verdict"] == "Equivalent" and out["witness"] == [0, 0, -1, 0]


def test_betti(capsys):
    code, out = run(capsys, "betti", "--genus", "3", "--boundary", "1", "--blocks", "1")
    assert code == 0 and out["rank"] == 20 and out["genus_ge_3"] is True


def test_tau_of_generated_elements(capsys, tmp_path):
    path = gen(capsys, tmp_path, "twist", "--genus", "2", "--handles", "1")
    code, out = run(capsys, "tau", "--file", path)
    assert code == 0 and out["welement"] == {"wedge3": [], "delta": {}}
    path = gen(capsys, tmp_path, "lantern")
    code, out = run(capsys, "tau", "--file", path)
    assert out["welement"]["wedge3"] == [["a0.1", "a0.2", "a0.3", -1]]
    path = gen(capsys, tmp_path, "bp")
    code, out = run(capsys, "delta", "--file", path, "--block", "1")
    assert out["delta"] == [1, 0] and out["agree"] is True
    code, out = run(capsys, "filtration", "--file", path)
    assert out["member"] == {"1": True, "2": True, "3": False, "4": False, "5": False}


def test_push_and_basepoint(capsys, tmp_path):
    path = gen(capsys, tmp_path, "push", "--genus", "1", "--blocks", "1,1", "--loop", "x1", "--block", "1")
    code, out = run(capsys, "w-check", "--file", path)
    assert code == 0 and out["in_W"] is True
    code, out = run(capsys, "push", "--file", path, "--cap", "1")
    assert out["welement"] == {"wedge3": [], "delta": {}}
    code, out = run(capsys, "push", "--file", path, "--glue", '{"1": {"genus": 1, "boundaries": 0}}')
    assert out["welement"]["wedge3"] == [["x1", "x3", "x4", -1]]
    code, out = run(capsys, "basepoint", "--file", path, "--block", "1")
    assert out["welement"]["delta"] == {"1": [1, 0]}


def test_welement_file_round_trip(capsys, tmp_path):
    path = gen(capsys, tmp_path, "lantern")
    _, out = run(capsys, "tau", "--file", path)
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps({"surface": {"genus": 0, "blocks": [4]}, **out["welement"]}))
    code, again = run(capsys, "w-check", "--file", str(wfile))
    assert code == 0 and again["input"] == out["welement"] and again["in_W"]


def test_lcs_class_and_surface_info(capsys):
    code, out = run(capsys, "lcs-class", "--genus", "2", "--word", "x1 x2 x1^-1 x2^-1")
    assert out["degree"] == 2 and out["class"]["terms"] == [["[x1,x2]", 1]]
    code, out = run(capsys, "lcs-class", "--genus", "1", "--word", "")
    assert out["identity"] is True
    code, out = run(capsys, "surface", "info", "--surface", '{"genus": 0, "blocks": [2, 2]}')
    assert out["rank_H"] == 4 and out["D_perp_rank"] == 2


def test_error_envelopes(capsys, tmp_path):
    code, out = run(capsys, "orbit", "nonsep", "--genus", "2", "--gamma", "x1", "--delta", "x2")
    assert code == 1 and out["error"]["kind"] == "NotHomologous"
    code, out = run(capsys, "tau", "--file", str(tmp_path / "missing.json"))
    assert code == 2 and out["error"]["kind"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run(capsys, "tau", "--file", str(bad))
    assert code == 2
    code, out = run(capsys, "lcs-class", "--word", "q1")
    assert code == 2
    code, out = run(capsys, "betti", "--genus", "1", "--boundary", "1", "--blocks", "2")
    assert code == 1 and out["error"]["kind"] == "BadPartition"
    with pytest.raises(SystemExit) as exc:
        main(["betti", "--genus", "1"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    argv = ["orbit", "sep", "--genus", "3", "--gamma", "x1 x2 x1^-1 x2^-1", "--delta", "x5 x1 x2 x1^-1 x2^-1 x5^-1"]
    main(["--json", *argv])
    first = capsys.readouterr().out
    main(["--json", *argv])
    assert capsys.readouterr().out == first


@pytest.mark.skipif(shutil.which("johnsonkit") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["johnsonkit", "betti", "--genus", "2", "--boundary", "2", "--blocks", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["rank"] == 8
    res = subprocess.run([sys.executable, "-m", "johnsonkit.cli", "betti", "--genus", "0", "--boundary", "4",
                          "--blocks", "1"], capture_output=True, text=True)
    assert json.loads(res.stdout)["rank"] == 1

from __future__ import annotations

import json

from hermlat import __version__
from hermlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_truant_text(capsys):
    code, out, _ = run(capsys, "truant", "--m", "17", "--gram", "1;1;2", "--diag")
    assert code == 0
    assert out.splitlines()[1] == "14"
    code, out, _ = run(capsys, "truant", "--m", "39", "--gram", "1")
    assert out.splitlines()[1] == "2"


def test_truant_json_envelope(capsys):
    code, out, _ = run(capsys, "truant", "--m", "39", "--gram", "1,0,0;0,2,w;0,cw,5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["truant"] == 13
    assert doc["tool"] == "hermlat" and doc["version"] == __version__
    assert doc["input"]["m"] == 39 and len(doc["witnesses"]) == 12


def test_truant_universal_below_limit(capsys):
    code, out, _ = run(capsys, "truant", "--m", "3", "--gram", "1;1", "--diag", "--limit", "50")
    assert code == 0 and "universal up to 50" in out


def test_check_modes(capsys):
    code, out, _ = run(capsys, "check", "--m", "19", "--gram", "1;2", "--diag", "--mode", "critical")
    assert code == 0 and json.loads(out)["certificate"]["certified"] is True
    code, out, _ = run(capsys, "check", "--m", "39", "--gram", "1,0,0;0,2,w;0,cw,5",
                       "--mode", "empirical", "--bound", "1404")
    cert = json.loads(out)["certificate"]
    assert code == 1 and cert["truant"] == 13
    code, out, _ = run(capsys, "check", "--m", "6", "--gram", "1;1;2", "--diag",
                       "--mode", "inherited", "--text")
    assert code == 0 and "<1,1,2,6>_Z" in out


def test_escalate(capsys, tmp_path):
    code, out, _ = run(capsys, "escalate", "--m", "3", "--depth", "2")
    assert code == 0 and out.strip().endswith("truants: 2")
    cache = tmp_path / "nodes.json"
    code, out, _ = run(capsys, "escalate", "--m", "3", "--depth", "2", "--json", "--resume",
                       "--cache", str(cache))
    assert code == 0 and json.loads(out)["complete"] and cache.exists()


def test_escalate_resource_limit(capsys):
    code, out, err = run(capsys, "escalate", "--m", "17", "--depth", "3", "--max-nodes", "4", "--json")
    assert code == 3 and "resource limit" in err
    assert json.loads(out)["complete"] is False


def test_tables_formats(capsys):
    code, out, _ = run(capsys, "tables", "binary", "--only", "3", "--csv")
    assert code == 0 and out.startswith("key,expected,computed,ok,cite")
    code, out, _ = run(capsys, "tables", "truants", "--only", "39", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["rows"]


def test_input_errors(capsys):
    assert run(capsys, "truant", "--m", "4", "--gram", "1")[0] == 2
    assert run(capsys, "truant", "--m", "5", "--gram", "1,w;w,1")[0] == 2
    assert run(capsys, "truant", "--m", "5", "--gram", "1,2;2,1")[0] == 2
    assert run(capsys, "check", "--m", "5", "--gram", "1", "--mode", "magic")[0] == 2
    assert run(capsys, "tables", "nonsense")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--version")[0] == 0

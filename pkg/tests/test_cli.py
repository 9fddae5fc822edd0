import json
import subprocess
import sys

import pytest

from hsg import hyper
from hsg.cli import main
from hsg.grammar import Cfg
from hsg.oracle import FreeCommutativeOracle


@pytest.fixture(scope="module")
def bundles(tmp_path_factory):
    d = tmp_path_factory.mktemp("bundles")
    s = hyper.bicyclic_structure()
    hyper.save_structure(s, d / "bicyclic.json")
    g = s.table.cfg
    prods = list(g.productions)
    del prods[-3]
    broken = hyper.HyperbolicStructure(s.combing, hyper.TableLanguage(Cfg(g.terminals, g.nonterminals, tuple(prods), g.start)))
    hyper.save_structure(broken, d / "broken.json")
    hyper.save_structure(hyper.subfree_structure(), d / "subfree.json")
    (d / "freecomm.json").write_text(json.dumps(FreeCommutativeOracle().to_json()))
    (d / "r2.txt").write_text("b*a* + b*a*ab\n")
    (d / "junk.json").write_text("{not json")
    return d


@pytest.fixture(autouse=True)
def _caps(monkeypatch):
    monkeypatch.delenv("HSG_CAP_ELEMENTS", raising=False)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_verify_ok(capsys, bundles):
    code, out = run(capsys, "verify-table", "--structure", bundles / "bicyclic.json", "--maxlen", 12)
    rep = json.loads(out)
    assert code == 0 and rep["verified"] and rep["disagreements"] == []
    assert rep["checked"] == 18564 and rep["tool"] == "hsg" and rep["version"]
    assert rep["config"]["maxlen"] == 12


def test_verify_fails_on_corruption(capsys, bundles):
    code, out = run(capsys, "verify-table", "--structure", bundles / "broken.json", "--maxlen", 8)
    assert code == 1 and json.loads(out)["disagreements"]


def test_input_errors(capsys, bundles, tmp_path):
    for path in (tmp_path / "missing.json", bundles / "junk.json"):
        assert main(["verify-table", "--structure", str(path)]) == 2
    assert main(["demo", "nosuch"]) == 2
    assert main(["verify-table", "--structure", str(bundles / "bicyclic.json"), "--maxlen", "0"]) == 2
    assert main(["measure", "ft", "--structure", str(bundles / "bicyclic.json")]) == 2
    assert main(["measure", "intersect"]) == 2
    capsys.readouterr()


def test_cap_exit(capsys, bundles):
    code, out = run(capsys, "verify-table", "--structure", bundles / "subfree.json", "--maxlen", 9,
                    "--cap-words", 1000)
    assert code == 3 and json.loads(out)["partial"]


def test_measure_delta(capsys, bundles):
    code, out = run(capsys, "measure", "delta", "--structure", bundles / "bicyclic.json", "--maxlen", 10)
    rep = json.loads(out)
    assert code == 0 and rep["kind"] == "delta"
    assert rep["fit"]["within_bound"] and rep["fit"]["bound"] == 2 * rep["fit"]["k"]


def test_measure_intersect(capsys, bundles):
    code, out = run(capsys, "measure", "intersect", "--oracle", bundles / "freecomm.json", "--n", 8)
    rep = json.loads(out)
    assert code == 0 and rep["fit"] == {"d": 4, "lower_bound": 4, "meets_lower_bound": True}
    code, out = run(capsys, "measure", "intersect", "--oracle", bundles / "freecomm.json", "--paths", "ab", "ba")
    assert json.loads(out)["fit"]["d"] == 1


def test_measure_ft_and_lognhd(capsys, bundles):
    code, out = run(capsys, "measure", "ft", "--structure", bundles / "bicyclic.json",
                    "--combing2", bundles / "r2.txt", "--maxlen", 10)
    assert code == 0 and json.loads(out)["fit"] == {"k1": 0, "k2": 0.0}
    code, out = run(capsys, "measure", "lognhd", "--structure", bundles / "bicyclic.json", "--maxlen", 6)
    assert code == 0 and json.loads(out)["kind"] == "lognhd"


def test_formats_and_out(capsys, bundles, tmp_path):
    code, out = run(capsys, "measure", "lognhd", "--structure", bundles / "bicyclic.json", "--maxlen", 4,
                    "--format", "csv")
    assert out.splitlines()[0] == "n,max,count"
    code, out = run(capsys, "verify-table", "--structure", bundles / "bicyclic.json", "--format", "text")
    assert "verified: True" in out
    dest = tmp_path / "r.json"
    code, out = run(capsys, "verify-table", "--structure", bundles / "bicyclic.json", "--out", dest)
    assert out == "" and json.loads(dest.read_text())["verified"]


def test_reports_are_deterministic(capsys, bundles):
    a = json.loads(run(capsys, "measure", "delta", "--structure", bundles / "bicyclic.json", "--maxlen", 6)[1])
    b = json.loads(run(capsys, "measure", "delta", "--structure", bundles / "bicyclic.json", "--maxlen", 6)[1])
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b


@pytest.mark.parametrize("name", ["bicyclic", "free", "subfree", "adjoin-zero", "wp-z"])
def test_demos(capsys, name):
    code, out = run(capsys, "demo", name)
    assert code == 0 and out.strip()
    if name == "subfree":
        assert all(img in out for img in ("ac", "ca", "ab"))


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hsg", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("hsg ")

import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given

from si_lab.cli import main
from si_lab.matrix_io import EntryParseError, format_entry, parse_entry, parse_inline
from si_lab.exact_arith import GaussianRational as G

from strategies import gaussians

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_entry_examples():
    assert parse_entry("3/5") == G("3/5")
    assert parse_entry("4/5+3/5i") == G("4/5", "3/5")
    assert parse_entry("-i") == G(0, -1)
    assert parse_entry(" 1 + i ") == G(1, 1)
    assert parse_entry("-2/3i") == G(0, "-2/3")
    assert parse_entry("0/7") == G(0)


@pytest.mark.parametrize("bad,pos", [("3//5", 2), ("", 0), ("1+2", 3), ("ii", 1), ("1/0", 2), ("x", 0)])
def test_parse_entry_errors_report_position(bad, pos):
    with pytest.raises(EntryParseError) as info:
        parse_entry(bad)
    assert info.value.pos == pos


@given(gaussians)
def test_entry_roundtrip(z):
    assert parse_entry(format_entry(z)) == z


def test_inline_matrix():
    assert parse_inline("0,1;0,0").to_rows()[0][1] == G(1)


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "0,1;0,0")
    assert code == 0
    assert "si       Yes" in out and "Theorem TR1" in out


def test_classify_json_with_oracle(capsys):
    code, out, _ = run(capsys, "classify", "--corpus", "nilpotent-e12", "--oracle-max-len", "8", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["verdict"]["basis"] == ["Theorem TR1"]
    assert rep["oracle"]["element_count"] == 5 and rep["oracle"]["agreement"] == "agree"


def test_classify_rns_with_oracle(capsys):
    code, out, _ = run(capsys, "classify", "--corpus", "rns-3-4-5", "--oracle-max-len", "8", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["oracle"]["agreement"] in ("agree", "oracle-inconclusive")


def test_classify_bad_entry_exits_2(capsys):
    code, _, err = run(capsys, "classify", "3//5,0;0,0")
    assert code == 2 and "position 2" in err


def test_classify_non_square_exits_2(capsys):
    assert run(capsys, "classify", "1,2,3;4,5,6")[0] == 2
    assert run(capsys, "classify", "--corpus", "no-such-matrix")[0] == 2


def test_classify_file(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"name": "mine", "rows": [["0", "1"], ["0", "0"]]}))
    code, out, _ = run(capsys, "classify", str(f), "--json")
    assert code == 0 and json.loads(out)["input"]["name"] == "mine"


@pytest.mark.parametrize("golden,argv", [
    ("classify_trace_norm_4_5.json", ["classify", "--corpus", "trace-norm-4-5", "--oracle-max-len", "8", "--json"]),
    ("classify_ens_3x3.json", ["classify", "--corpus", "ens-3x3", "--oracle-max-len", "10", "--json"]),
    ("trace_norm_imaginary.json", ["trace-norm", "2/5i", "5/2", "--json"]),
])
def test_golden_outputs(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_json_is_byte_identical_across_runs_and_workers(capsys):
    base = ["classify", "--corpus", "trace-norm-imaginary", "--oracle-max-len", "7", "--json"]
    outs = {run(capsys, *base)[1], run(capsys, *base)[1], run(capsys, *base, "--workers", "3")[1]}
    assert len(outs) == 1


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "TtT", "0,1;0,0")
    assert code == 0 and out.startswith("s^1 · T")
    assert run(capsys, "reduce", "TT", "0,1;0,0")[1].startswith("0")
    assert run(capsys, "reduce", "tT", "--corpus", "rns-3-4-5")[1].startswith("T*T")
    assert run(capsys, "reduce", "TtT", "1,0;0,1")[0] == 2
    assert run(capsys, "reduce", "TxT", "0,1;0,0")[0] == 2


def test_trace_norm_command(capsys):
    assert "m=1 n=1 l=1" in run(capsys, "trace-norm", "4/5", "25/16")[1]
    assert "m=1 n=0 l=1" in run(capsys, "trace-norm", "1", "1")[1]
    assert "m=1 n=1 l=1" in run(capsys, "trace-norm", "3/5+4/5i", "1")[1]
    out = run(capsys, "trace-norm", "3/13+4/13i", "1")[1]
    assert out.startswith("none") and "modulus" in out
    assert run(capsys, "trace-norm", "0", "1")[0] == 2


def test_oracle_command_dump(tmp_path, capsys):
    dump = tmp_path / "c.json"
    code, out, _ = run(capsys, "oracle", "--corpus", "nilpotent-e12", "--dump", str(dump), "--json")
    assert code == 0 and json.loads(out)["element_count"] == 5
    doc = json.loads(dump.read_text())
    assert doc["saturated"] and len(doc["elements"]) == 5 and doc["dim"] == 2


def test_env_var_caps_closure(capsys, monkeypatch):
    monkeypatch.setenv("SI_LAB_MAX_ELEMS", "10")
    code, out, _ = run(capsys, "oracle", "1,1;0,1", "--max-len", "40", "--json")
    rep = json.loads(out)
    assert not rep["saturated"] and rep["max_len_reached"] < 40


def test_corpus_listing_and_run(capsys):
    code, out, _ = run(capsys, "corpus", "--json")
    assert code == 0 and len(json.loads(out)) >= 25
    code, out, _ = run(capsys, "corpus", "--run-all", "--json", "--oracle-max-len", "6")
    rows = {r["name"]: r for r in json.loads(out)}
    assert code == 0
    assert rows["nilpotent-e12"]["oracle_elements"] == 5
    assert (rows["rns-3-4-5"]["si"], rows["rns-3-4-5"]["simple"]) == ("Yes", "No")
    assert rows["similarity-A"]["si"] == "No"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "si_lab", "trace-norm", "1", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "m=1 n=0 l=1" in r.stdout

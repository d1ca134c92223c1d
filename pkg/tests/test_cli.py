import json

import pytest

from momentrigidity.cli import main
from momentrigidity.core import MomentSequence, save_sequence
from momentrigidity.corpus import corpus_get


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def corpus_file(tmp_path):
    def make(name, L=32):
        path = tmp_path / f"{name}.json"
        save_sequence(corpus_get(name, L), path)
        return path
    return make


def test_check_two_atom(capsys, corpus_file):
    code, out, _ = run(capsys, "check", corpus_file("two_atom", 6), "--order", 3)
    assert code == 0
    doc = json.loads(out)
    assert doc["hankel"] == {"status": "psd_singular", "order": 3, "rank": 2}


def test_check_stieltjes_reports_shift(capsys, corpus_file):
    code, out, _ = run(capsys, "check", corpus_file("factorial", 5), "--order", 2)
    assert json.loads(out)["shifted"]["status"] == "positive_definite"


def test_perturb_gaussian(capsys, corpus_file):
    code, out, _ = run(capsys, "perturb", corpus_file("gaussian", 7), "--m", 2, "--order", 3)
    doc = json.loads(out)
    assert code == 0 and doc["interval"][0] == "-1"
    lo, hi = (MomentSequence((v,)).entries[0] for v in doc["hi_bracket"])
    assert (lo + 1) ** 2 <= 3 < (hi + 1) ** 2


def test_region_heavy_tail(capsys, corpus_file):
    code, out, _ = run(capsys, "region", corpus_file("heavy_tail"), "--terms", 12, "--json")
    doc = json.loads(out)
    assert {"A", "B", "C", "vertex", "rho0"} <= set(doc)
    assert "\n" not in out.strip()


def test_index_and_report(capsys, corpus_file):
    code, out, _ = run(capsys, "index", corpus_file("heavy_tail"), "--nmax", 1, "--terms", 12)
    assert code == 0 and json.loads(out)["index_window"] == [-1, -1]
    code, out, _ = run(capsys, "report", corpus_file("two_atom"), "--nmax", 2)
    assert json.loads(out)["classification"] == "RigidAllButZeroth"


def test_prepend_and_extend(capsys, corpus_file):
    path = corpus_file("heavy_tail")
    code, out, _ = run(capsys, "prepend", path, "--c1", 0, "--c2", 1, "--terms", 12)
    assert code == 0 and json.loads(out)["placement"] == "Interior"
    code, out, _ = run(capsys, "extend", path, "--n", 2, "--margins", "1,1/2", "--terms", 12)
    doc = json.loads(out)
    assert doc["sequence"]["kind"] == "stieltjes" and len(doc["sequence"]["moments"]) == 34


def test_corpus_commands(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert [e["name"] for e in json.loads(out)["entries"]][0] == "boundary_prepend"
    code, out, _ = run(capsys, "corpus", "get", "gaussian", "--len", 7)
    assert json.loads(out)["moments"] == ["1", "0", "1", "0", "3", "0", "15"]


def test_byte_stable(capsys, corpus_file):
    path = corpus_file("catalan")
    first = run(capsys, "report", path, "--nmax", 1)[1]
    second = run(capsys, "report", path, "--nmax", 1)[1]
    assert first == second


def test_global_flags(capsys, corpus_file):
    path = corpus_file("heavy_tail")
    code, out, _ = run(capsys, "--json", "index", path, "--nmax", 0, "--terms", 12, "--window", 3,
                       "--ratio-threshold", 0.8, "--precision", 128)
    assert code == 0 and json.loads(out)["verdicts"][0]["status"] == "IndeterminateEvidence"


def test_exit_codes(capsys, corpus_file, tmp_path):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "corpus", "get", "nope")
    assert code == 2 and "error" in json.loads(err)
    code, _, err = run(capsys, "region", corpus_file("gaussian", 5), "--terms", 9)
    assert code == 3
    code, _, err = run(capsys, "region", corpus_file("two_atom", 9), "--terms", 4)
    assert code == 3 and json.loads(err)["error"] == "DegenerateError"
    bad = tmp_path / "bad.json"
    bad.write_text('{"moments": [1, 0.5]}')
    code, _, err = run(capsys, "check", bad)
    assert code == 2
    code, _, err = run(capsys, "prepend", corpus_file("heavy_tail"), "--c1", 0, "--c2", -1, "--terms", 4)
    assert code == 2 and json.loads(err)["error"] == "NotAMomentPrefixError"


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "momentrigidity", "corpus", "get", "dirac0", "--len", "3", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["moments"] == ["1", "0", "0"]

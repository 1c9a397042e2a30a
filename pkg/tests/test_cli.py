import json
import subprocess
import sys

import pytest

from quiverlr.cli import run
from quiverlr.schubert import Permutation, rank_conditions_of


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stanley(capsys):
    assert call(capsys, "stanley", "2431") == (0, "s[3,1]\n", "")
    assert call(capsys, "stanley", "1")[1] == "1\n"


def test_stanley_json(capsys):
    code, out, _ = call(capsys, "stanley", "2431", "--json")
    assert code == 0 and json.loads(out) == {"[3,1]": 1}
    code, out2, _ = call(capsys, "--json", "stanley", "2431")
    assert out2 == out


def test_reduced_words(capsys):
    assert call(capsys, "reduced-words", "321", "--count")[1] == "2\n"
    assert call(capsys, "reduced-words", "321")[1] == "2\n"
    assert call(capsys, "reduced-words", "321", "--list")[1] == "1 2 1\n2 1 2\n"
    code, out, _ = call(capsys, "reduced-words", "4321", "--json")
    assert json.loads(out) == 16


def test_coeffs(capsys):
    code, out, _ = call(capsys, "coeffs", "2431")
    assert code == 0 and len(out.splitlines()) == 8
    assert "c_w(0,0; 0,1; [1,1,1]) = 1" in out
    code, out, _ = call(capsys, "coeffs", "2431", "--json")
    rows = json.loads(out)
    assert {"a": [0, 0], "b": [0, 0], "lambda": [2, 1, 1], "coeff": 1} in rows


def test_schubert_double(capsys):
    code, out, _ = call(capsys, "schubert", "2431", "--double")
    assert code == 0 and "oracle match: True" in out
    code, out, _ = call(capsys, "schubert", "2431", "--double", "--vars", "4,4", "--json")
    payload = json.loads(out)
    assert payload["oracle_match"] is True and len(payload["terms"]) == 8


def test_schubert_bad_vars(capsys):
    assert call(capsys, "schubert", "2431", "--vars", "1")[0] == 2
    assert call(capsys, "schubert", "2431", "--vars", "a,b")[0] == 2


def test_quiver_from_file(capsys, tmp_path):
    path = tmp_path / "r.txt"
    path.write_text(rank_conditions_of(Permutation.parse("2431")).to_text())
    code, out, _ = call(capsys, "quiver", str(path))
    assert code == 0 and out.count(" + ") == 9
    code, out, _ = call(capsys, "quiver", str(path), "--json")
    assert len(json.loads(out)) == 10


def test_quiver_rejects_impossible_ranks(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1\n1 1\n2\n")
    code, _, err = call(capsys, "quiver", str(path))
    assert code == 2 and "r_(0,1)" in err
    code, _, err = call(capsys, "quiver", str(tmp_path / "missing.txt"))
    assert code == 2


def test_factorseq(capsys):
    code, out, _ = call(capsys, "factorseq", "2431", "--check")
    assert code == 0 and "MISMATCH" not in out
    code, out, _ = call(capsys, "factorseq", "2431", "--json")
    assert sum(e["count"] for e in json.loads(out)) == 10


def test_verify_s3(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "s3")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call(capsys, "verify", "--suite", "s3", "--json")
    payload = json.loads(out)
    assert payload["failed"] == 0 and payload["results"]


@pytest.mark.parametrize("argv", [["stanley", "2231"], ["stanley", "abc"], ["nosuch"], ["verify", "--suite", "s9"]])
def test_input_errors_exit_2(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_bad_permutation_names_the_problem(capsys):
    _, _, err = call(capsys, "stanley", "2231")
    assert err.startswith("error:")


def test_output_is_deterministic(capsys):
    first = call(capsys, "coeffs", "3412", "--json")
    second = call(capsys, "coeffs", "3412", "--json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quiverlr", "stanley", "321"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "s[2,1]\n"

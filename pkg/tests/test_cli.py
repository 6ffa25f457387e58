import io
import json
import subprocess
import sys

import pytest

from pathcover_lab.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen(capsys):
    assert run(capsys, "gen", "K(3)") == (0, "Bw\n", "")
    assert run(capsys, "gen", "P(2)")[1] == "A_\n"
    code, out, _ = run(capsys, "gen", "F1(1,1)", "S(3)")
    # F1(1,1) is a claw centred at 0, the same labelled graph as S(3)
    assert code == 0 and out.split() == ["Cs", "Cs"]


def test_gen_errors(capsys):
    code, out, err = run(capsys, "gen", "Q(3)")
    assert code == 2 and out == "" and "cannot parse" in err
    code, _, err = run(capsys, "gen", "H1(1,3)")
    assert code == 2 and "s >= 2" in err


def test_invariants_claw(capsys):
    code, out, _ = run(capsys, "--json", "invariants", "S(3)")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"command", "inputs", "results", "checks"}
    r = rep["results"][0]
    assert (r["pc"]["value"], r["pp"]["value"], r["cc"]["value"], r["cp"]["value"]) == (2, 2, 3, 3)
    assert r["alpha"]["value"] == 3 and r["ham"] is False
    assert all(c["ok"] for c in rep["checks"])


def test_invariants_text_and_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "invariants", "--which", "pc,pp,cc", "P(5)")
    assert (code, out) == (0, "P(5): pc=1 pp=1 cc=3\n")
    code, out, _ = run(capsys, "invariants", "--which", "pp", stdin="Bw\n\nA_\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "Bw: pp=1\nA_: pp=1\n")
    code, out, _ = run(capsys, "invariants", "--which", "pp", "H3(2,3)")
    assert out == "H3(2,3): pp=2\n"


def test_invariants_budget_and_errors(capsys):
    code, _, err = run(capsys, "invariants", "--which", "cc", "H1(4,3)")
    assert code == 2 and "budget 16" in err
    code, out, _ = run(capsys, "--max-order-exact", "18", "invariants", "--which", "cc", "H1(4,3)")
    assert code == 0 and out.startswith("H1(4,3): cc=")
    code, _, err = run(capsys, "invariants", "--which", "pc", "P(19)")
    assert code == 2 and "budget 18" in err
    code, _, err = run(capsys, "invariants", "B!")
    assert code == 2 and "offset" in err
    code, _, err = run(capsys, "invariants", "--which", "xx", "Bw")
    assert code == 2


def test_free(capsys):
    code, out, _ = run(capsys, "free", "Kstar(3)", "--family", "S(3)")
    assert (code, out) == (0, "Kstar(3): free\n")
    code, out, _ = run(capsys, "--json", "free", "H1(3,3)", "--family", "S(3)")
    rep = json.loads(out)
    member = rep["results"][0]["members"][0]
    assert code == 0 and not rep["results"][0]["free"] and member["present"]
    assert member["witness"][0] == 9  # v_1 = s*t = 9 is the claw centre
    code, out, _ = run(capsys, "free", "P(9)", "--family", "S(3)", "--family", "Kstar(3)")
    assert out == "P(9): free\n"


def test_cover(capsys):
    code, out, _ = run(capsys, "--json", "cover", "P(9)", "--n", "3")
    rep = json.loads(out)
    r = rep["results"][0]
    assert code == 0 and len(r["paths"]["paths"]) == 1
    assert r["certificate"]["size"] <= r["certificate"]["total_bound"]
    code, out, err = run(capsys, "cover", "S(3)", "--n", "3", "--check-freeness")
    assert code == 1 and "input contains induced K_{1,3}" in err
    # Without the freeness flag a claw still gets a valid (if unguaranteed) partition.
    code, out, _ = run(capsys, "cover", "Cs", "--n", "3", "--mode", "partition")
    assert code == 0 and out.splitlines()[1:] == ["  1 0 2", "  3"]
    code, _, err = run(capsys, "cover", "C?", "--n", "3")
    assert code == 2 and "connected" in err


def test_cover_big_constants(capsys):
    code, out, _ = run(capsys, "--json", "cover", "P(5)", "--n", "4")
    assert code == 0 and len(out) > 10_000


def test_verify_and_flag_positions(capsys):
    code, out, _ = run(capsys, "verify", "ramsey")
    assert code == 0 and out.count("PASS") == 3
    code, out, _ = run(capsys, "verify", "random", "--seed", "1", "--count", "30", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["inputs"]["seed"] == 1 and all(c["ok"] for c in rep["checks"])


def test_sample(capsys):
    assert run(capsys, "sample", "--order", "5", "--p", "1")[1] == "D~{\n"
    assert run(capsys, "sample", "--order", "4", "--p", "0", "--count", "2")[1] == "C?\nC?\n"
    a = run(capsys, "--seed", "9", "sample", "--order", "7", "--p", "0.5", "--count", "4")
    b = run(capsys, "sample", "--order", "7", "--p", "0.5", "--count", "4", "--seed", "9")
    assert a == b and a[0] == 0 and len(a[1].split()) == 4
    code, _, err = run(capsys, "sample", "--order", "63", "--p", "0.5")
    assert code == 2 and "order" in err


def test_console_script_roundtrip():
    proc = subprocess.run([sys.executable, "-m", "pathcover_lab", "gen", "K(3)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "Bw\n"
    g = subprocess.run([sys.executable, "-m", "pathcover_lab", "sample", "--order", "6", "--p", "0.6",
                        "--count", "3", "--connected-only"], capture_output=True, text=True, check=True).stdout
    proc = subprocess.run([sys.executable, "-m", "pathcover_lab", "invariants", "--which", "alpha"],
                          input=g, capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and len(proc.stdout.splitlines()) == 3

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from splitoff.cli import main
from splitoff.formats import format_multigraph, format_solution
from splitoff.generators import k4, petersen
from splitoff.half_integral import HalfIntegralSolution

H = "1/2"


@pytest.fixture
def run(capsys):
    def call(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return call


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


@pytest.fixture
def k5_file(tmp_path, run):
    p = tmp_path / "k5.txt"
    assert run("generate", "circulant", 5, "-o", p)[0] == 0
    return p


def test_two_thirds_and_verify(tmp_path, run, k5_file):
    code, out, _ = run("two-thirds", k5_file, "--edge", 0, "--verify-levels")
    assert code == 0
    doc = json.loads(out)
    assert doc["bound_holds"] is True and doc["bound"] == "6" and doc["trace_length"] == 3
    assert doc["checks"]["lift_levels"] is True
    cert = write(tmp_path, "c.json", out)
    code, out, _ = run("verify", cert, k5_file)
    assert code == 0 and json.loads(out)["valid"] is True


def test_two_thirds_input_errors(tmp_path, run, k5_file):
    bad = write(tmp_path, "bad.txt", "multigraph 3 3\n0 1 1\n1 2 1\n0 2 1\n")
    code, _, err = run("two-thirds", bad)
    assert code == 2 and "vertex 0 has degree 2" in err
    assert run("two-thirds", k5_file, "--edge", 10)[0] == 2
    code, _, err = run("two-thirds", write(tmp_path, "p.txt", "multigraph 2 1\n0 1 x\n"))
    assert code == 2 and "line 2, column 5" in err
    assert run("two-thirds", tmp_path / "missing.txt")[0] == 2


def test_tampered_certificate_is_rejected(tmp_path, run, k5_file):
    _, out, _ = run("two-thirds", k5_file)
    doc = json.loads(out)
    doc["cost"] = "4"
    cert = write(tmp_path, "c.json", json.dumps(doc))
    code, out, _ = run("verify", cert, k5_file)
    report = json.loads(out)
    assert code == 2 and report["valid"] is False and report["checks"]["cost_matches"] is False
    doc = json.loads(run("two-thirds", k5_file)[1])
    doc["edges"] = doc["edges"][:-1]
    code, out, _ = run("verify", write(tmp_path, "d.json", json.dumps(doc)), k5_file)
    assert code == 2 and json.loads(out)["checks"]["two_edge_connected_spanning"] is False


def test_half_integral(tmp_path, run):
    c4 = write(tmp_path, "c4.txt", "subtour 4\n0 1 1 1\n1 2 1 1\n2 3 1 1\n0 3 1 1\n")
    code, out, _ = run("half-integral", c4)
    doc = json.loads(out)
    assert code == 0 and doc["cost"] == "4" and doc["bound"] == "16/3"
    assert run("verify", write(tmp_path, "c.json", out), c4)[0] == 0

    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    k5 = write(tmp_path, "k5.txt", format_solution(HalfIntegralSolution(5, dict.fromkeys(pairs, H), dict.fromkeys(pairs, 1))))
    code, out, _ = run("half-integral", k5, "--best-edge")
    assert code == 0 and int(json.loads(out)["cost"]) <= 6
    code, out, _ = run("half-integral", k5, "--edge", "2,4")
    assert code == 0 and json.loads(out)["designated"] == [2, 4]
    assert run("half-integral", k5, "--edge", "2")[0] == 2

    split = write(tmp_path, "s.txt", "subtour 6\n0 1 1 1\n1 2 1 1\n0 2 1 1\n3 4 1 1\n4 5 1 1\n3 5 1 1\n")
    code, _, err = run("half-integral", split)
    assert code == 2 and ("S = [0, 1, 2]" in err or "S = [3, 4, 5]" in err)


def test_nonmetric_flag(tmp_path, run):
    text = "subtour 4\n0 1 1 1\n1 2 1 1\n2 3 1 1\n0 3 1 1\ncosts\n0 2 3\n"
    f = write(tmp_path, "nm.txt", text)
    assert run("half-integral", f)[0] == 2
    with pytest.warns(UserWarning):
        assert run("half-integral", f, "--allow-nonmetric")[0] == 0


def test_convex(tmp_path, run, k5_file):
    base = write(tmp_path, "base.txt", "multigraph 2 4\n0 1 1\n0 1 1\n0 1 1\n0 1 1\n")
    code, out, _ = run("convex", base)
    doc = json.loads(out)
    assert code == 0 and [i["weight"] for i in doc["items"]] == ["1/3"] * 3
    code, out, _ = run("convex", k5_file, "--edge", 4)
    assert code == 0 and json.loads(out)["identity_holds"] is True
    assert run("verify", write(tmp_path, "c.json", out), k5_file)[0] == 0
    assert run("convex", k5_file, "--limit", 4)[0] == 3


def test_limits_environment(run, k5_file, monkeypatch):
    monkeypatch.setenv("SPLITOFF_LIMITS", "convex=4")
    assert run("convex", k5_file)[0] == 3
    monkeypatch.setenv("SPLITOFF_LIMITS", "convex=lots")
    assert run("convex", k5_file)[0] == 2


def test_cubic78(tmp_path, run, k5_file):
    pet = write(tmp_path, "pet.txt", format_multigraph(petersen()))
    code, out, _ = run("cubic78", pet)
    doc = json.loads(out)
    assert code == 0 and Fraction(doc["cost"]) <= 13 and doc["bound"] == "105/8"
    assert run("verify", write(tmp_path, "c.json", out), pet)[0] == 0
    code, out, _ = run("cubic78", write(tmp_path, "k4.txt", format_multigraph(k4())), "--try-all")
    assert code == 0 and Fraction(json.loads(out)["cost"]) <= 5
    code, _, err = run("cubic78", k5_file)
    assert code == 2 and "even number" in err


def test_batch_with_jobs(tmp_path, run):
    files = []
    for seed in range(3):
        p = tmp_path / f"g{seed}.txt"
        assert run("generate", "random-4reg4ec", 7, seed, "--costs", "random", "-o", p)[0] == 0
        files.append(p)
    code, out, _ = run("two-thirds", *files, "--jobs", 2)
    docs = json.loads(out)
    assert code == 0 and len(docs) == 3 and all(d["bound_holds"] for d in docs)
    for d, f in zip(docs, files):
        assert run("verify", write(tmp_path, "one.json", json.dumps(d)), f)[0] == 0


def test_batch_reports_worst_status(tmp_path, run, k5_file):
    bad = write(tmp_path, "bad.txt", "multigraph 2 1\n0 1 1\n")
    code, out, err = run("two-thirds", k5_file, bad)
    assert code == 2 and "bad.txt" in err and len(json.loads(out)) == 1


def test_generate_is_deterministic(tmp_path, run):
    a = run("generate", "cubic", 10, 3, "--costs", "random")[1]
    b = run("generate", "cubic", 10, 3, "--costs", "random")[1]
    assert a == b and a.startswith("multigraph 10 15\n")
    assert run("generate", "doubled-cycle", 4)[1].startswith("multigraph 4 8\n")


def test_module_entry_point(k5_file):
    proc = subprocess.run(
        [sys.executable, "-m", "splitoff", "two-thirds", str(k5_file)], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["bound_holds"] is True


@pytest.mark.parametrize("kind, n", [("circulant", 9), ("doubled-cycle", 6), ("random-4reg4ec", 8)])
def test_verify_accepts_everything_emitted(tmp_path, run, kind, n):
    g = tmp_path / "g.txt"
    run("generate", kind, n, 11, "--costs", "random", "-o", g)
    for argv in (["two-thirds", g, "--edge", 3], ["convex", g, "--edge", 1]):
        code, out, _ = run(*argv)
        assert code == 0
        assert run("verify", write(tmp_path, "c.json", out), g)[0] == 0

from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from circumlab import audit
from circumlab.cli import main


def run(argv, capsys, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_k3(capsys, monkeypatch):
    code, out, _ = run(["verify", "--jobs", "1"], capsys, "Bw\n", monkeypatch)
    record = json.loads(out)
    assert code == 0
    assert record["verdicts"]["B"] == "Holds" and record["hamiltonian"] and record["certificate"]["achieved"] == 3


def test_verify_malformed(capsys, monkeypatch):
    code, out, _ = run(["verify", "--jobs", "1", "--strict"], capsys, "Bw\n@@\nC~\n", monkeypatch)
    assert code == 2
    code, out, _ = run(["verify", "--jobs", "1"], capsys, "Bw\n@@\nC~\n", monkeypatch)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 3 and lines[1]["line"] == 2 and "error" in lines[1]


def test_verify_reports_counterexamples(capsys, monkeypatch, tmp_path):
    real = audit.audit_graph

    def flagged(g, **kw):
        rec = real(g, **kw)
        if g.n == 4:
            rec.violations.append("injected")
        return rec

    monkeypatch.setattr(audit, "audit_graph", flagged)
    code, out, err = run(["verify", "--jobs", "1"], capsys, "Bw\nC~\n", monkeypatch)
    assert code == 1
    assert "counterexample C~ injected" in err
    monkeypatch.setattr(audit, "audit_graph", real)
    token = err.split()[1]
    assert run(["verify", "--jobs", "1"], capsys, token + "\n", monkeypatch)[0] == 0


def test_verify_all_two_connected_six(capsys, tmp_path):
    src = tmp_path / "g6.txt"
    assert main(["enumerate", "6", "--filter", "two_connected", "--output", str(src)]) == 0
    capsys.readouterr()
    code, out, _ = run(["verify", "--jobs", "1", str(src)], capsys)
    assert code == 0 and len(out.splitlines()) == 11368


def test_parallel_output_is_byte_identical(tmp_path):
    src = tmp_path / "g6.txt"
    main(["enumerate", "5", "--output", str(src)])
    outs = []
    for jobs in ("1", "3"):
        dest = tmp_path / f"out{jobs}.jsonl"
        proc = subprocess.run([sys.executable, "-m", "circumlab", "verify", "--jobs", jobs, str(src),
                               "--output", str(dest)], capture_output=True)
        assert proc.returncode == 0, proc.stderr
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1] and outs[0].count(b"\n") == 1024


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("CIRCUMLAB_JOBS", "3")
    assert audit.default_jobs() == 3


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "3"], capsys)
    assert code == 0 and out.split() == ["B?", "B_", "BO", "Bo", "BG", "Bg", "BW", "Bw"]
    code, out, _ = run(["enumerate", "4", "--filter", "two_connected"], capsys)
    assert len(out.split()) == 10
    code, _, err = run(["enumerate", "9"], capsys)
    assert code == 2


def test_extremal(capsys):
    code, out, _ = run(["extremal", "--delta", "2..3", "--family", "E1,E2,E3"], capsys)
    reports = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(reports) == 6 and all(r["ok"] for r in reports)
    code, _, _ = run(["extremal", "--delta", "1"], capsys)
    assert code == 2
    code, out, _ = run(["extremal", "--delta", "2", "--family", "E2"], capsys)
    (e2,) = [json.loads(x) for x in out.splitlines()]
    assert not e2["hamiltonian"]
    assert e2["degrees"]["d_delta"] + e2["degrees"]["d_delta+1"] == e2["n"] - 1
    code, out, _ = run(["extremal", "--delta", "2", "--table"], capsys)
    assert code == 0 and "E3 delta=2" in out


def test_certify(capsys):
    code, out, err = run(["certify", "D}o", "--check"], capsys)
    assert code == 0 and json.loads(out)["achieved"] == 4 and "check: ok" in err
    code, out, err = run(["certify", "D{c"], capsys)
    assert code == 1 and "kappa=1" in err and "cut_vertex=0" in err
    code, out, _ = run(["certify", "C~"], capsys)
    data = json.loads(out)
    assert code == 0 and data["case"] == "TailHit" and data["achieved"] == 4
    assert run(["certify", "@@"], capsys)[0] == 2


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["extremal", "--delta", "x..y"])
    with pytest.raises(SystemExit):
        main(["enumerate", "4", "--filter", "trees"])

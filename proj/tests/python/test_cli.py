"""End-to-end smoke tests for the hosoya CLI binary."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("HOSOYA_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="HOSOYA_CLI not set")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


C5 = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_help_exits_cleanly():
    assert run("--help").returncode == 0
    assert run("compute", "--help").returncode == 0


def test_compute(tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text(C5)
    result = run("compute", str(f))
    assert result.returncode == 0
    assert result.stdout.strip() == "11"

    single = tmp_path / "k1.txt"
    single.write_text("1 0\n")
    assert run("compute", str(single)).stdout.strip() == "1"


def test_compute_stdin_polynomial():
    result = run("compute", "-", "--polynomial", stdin="4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert result.returncode == 0
    assert result.stdout.splitlines() == ["7", "1,4,2"]


def test_compute_methods_agree(tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text(C5)
    outputs = {run("compute", str(f), "--method", m).stdout for m in ("auto", "brute", "recursive", "fast")}
    assert outputs == {"11\n"}


def test_family_values():
    assert run("family", "--name", "lollipop", "--n", "6", "--k", "3").stdout.strip() == "16"
    assert run("family", "--name", "uprime", "--n", "5").stdout.strip() == "9"
    assert run("family", "--name", "l3max", "--n", "10", "--k", "4").stdout.strip() == "109"


def test_family_graph_emission():
    result = run("family", "--name", "cycle", "--n", "4", "--emit", "graph")
    assert result.returncode == 0
    assert result.stdout == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_family_path_attach(tmp_path):
    base = tmp_path / "c3.txt"
    base.write_text("3 3\n0 1\n1 2\n0 2\n")
    result = run("family", "--name", "pathattach", "--base", str(base),
                 "--v", "0", "--n", "5", "--k", "3", "--emit", "both")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "7 7"  # 3 base vertices + 4 new ones
    value = int(lines[-1])
    assert value > 0


def test_enumerate_counts_and_stream():
    assert run("enumerate", "--n", "3", "--count-only").stdout.strip() == "1"
    assert run("enumerate", "--n", "6", "--count-only").stdout.strip() == "13"
    stream = run("enumerate", "--n", "5").stdout
    records = [r for r in stream.split("%\n") if r.strip()]
    assert len(records) == 5
    girth5 = run("enumerate", "--n", "8", "--girth", "5", "--count-only").stdout.strip()
    assert girth5.isdigit()


def test_verify_pass_and_json():
    result = run("verify", "--check", "tables", "--n", "5", "--format", "json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["verdict"] == "pass"
    assert doc["checks"][0]["check"] == "tables"
    assert doc["checks"][0]["params"]["n"] == "5"

    again = run("verify", "--check", "tables", "--n", "5", "--format", "json")
    assert again.stdout == result.stdout  # byte-stable reports


def test_verify_identities():
    result = run("verify", "--check", "identities", "--max", "60")
    assert result.returncode == 0


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    assert run("compute", str(bad)).returncode == 2

    assert run("family", "--name", "lollipop", "--n", "4", "--k", "9").returncode == 2
    assert run("family", "--name", "nosuch", "--n", "4").returncode == 2
    assert run("enumerate", "--n", "20", "--count-only").returncode == 2

    path30 = "30 29\n" + "\n".join(f"{i} {i + 1}" for i in range(29)) + "\n"
    big = tmp_path / "p30.txt"
    big.write_text(path30)
    assert run("compute", str(big), "--method", "brute").returncode == 3
    assert run("compute", str(big), "--method", "fast").returncode == 0

    k4 = tmp_path / "k4.txt"
    k4.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run("compute", str(k4), "--method", "fast").returncode == 3

    assert run("verify", "--check", "nosuch").returncode == 2
    assert run("nosuchcommand").returncode == 2


def test_closed_form_agrees_with_fast_route_end_to_end(tmp_path):
    graph_text = run("family", "--name", "lollipop", "--n", "500", "--k", "5",
                     "--emit", "graph").stdout
    f = tmp_path / "l500.txt"
    f.write_text(graph_text)
    computed = run("compute", str(f), "--method", "fast").stdout.strip()
    closed = run("family", "--name", "lollipop", "--n", "500", "--k", "5").stdout.strip()
    assert computed == closed
    assert len(closed) > 100  # genuinely big exact integer


def test_slide_triples_from_file(tmp_path):
    c6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"
    p2 = "2 1\n0 1\n"
    p3 = "3 2\n0 1\n1 2\n"
    losing = tmp_path / "losing.txt"
    losing.write_text(f"{c6}%\n{p2}%\n{p3}")
    result = run("verify", "--check", "slide", "--triples", str(losing))
    assert result.returncode == 1
    assert "witness" in result.stdout

    winning = tmp_path / "winning.txt"
    winning.write_text(f"{p2}%\n{c6}%\n{p3}")
    assert run("verify", "--check", "slide", "--triples", str(winning)).returncode == 0

    lopsided = tmp_path / "two.txt"
    lopsided.write_text(f"{p2}%\n{c6}")
    assert run("verify", "--check", "slide", "--triples", str(lopsided)).returncode == 2


def test_csv_output(tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text(C5)
    result = run("compute", str(f), "--format", "csv", "--polynomial")
    lines = result.stdout.splitlines()
    assert lines[0].startswith("z,m0")
    assert lines[1].split(",")[0] == "11"

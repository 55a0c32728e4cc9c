import json
import subprocess
import sys
from pathlib import Path

import pytest

from cutdecomp import families as F
from cutdecomp.cli import main
from cutdecomp.io import format_edgelist, parse_edgelist

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, monkeypatch, capsys):
    monkeypatch.chdir(GOLDEN)
    monkeypatch.setenv("NO_COLOR", "1")
    code = main(case["argv"])
    out, err = capsys.readouterr()
    assert code == case["exit"]
    assert (out + err).encode() == (GOLDEN / f"{case['name']}.out").read_bytes()


def _json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_stdin_input(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(format_edgelist(F.cycle(4))))
    code, rep = _json(capsys, ["cutsets", "-"])
    assert code == 0
    assert rep["result"]["cutsets"] == [[0, 2], [1, 3]]
    assert rep["result"]["single"] == []
    assert rep["result"]["independent"] == [[None, False], [False, None]]


def test_exit_codes(tmp_path, capsys):
    path = tmp_path / "p.edges"
    path.write_text(format_edgelist(F.path(4)))
    assert main(["tree", str(path)]) == 2
    assert main(["tree", str(tmp_path / "missing")]) == 1
    big = tmp_path / "k.edges"
    big.write_text(format_edgelist(F.complete(13)))
    assert main(["color", str(big)]) == 3
    capsys.readouterr()


def test_k1_tree_on_path(tmp_path, capsys):
    path = tmp_path / "p.edges"
    path.write_text(format_edgelist(F.path(3)))
    code, rep = _json(capsys, ["tree", str(path), "--k1"])
    assert code == 0 and rep["result"]["cutpoints"] == [1]


@pytest.mark.parametrize("graph,expect", [
    (F.complete(5), {"planar": False, "model": "K5"}),
    (F.complete(4), {"planar": True}),
])
def test_planar_command(tmp_path, capsys, graph, expect):
    path = tmp_path / "g.edges"
    path.write_text(format_edgelist(graph))
    code, rep = _json(capsys, ["planar", str(path)])
    assert rep["result"]["planar"] == expect["planar"]
    if "model" in expect:
        assert rep["result"]["witness"]["model"] == expect["model"]
        assert rep["result"]["witness_verified"]


def test_color_and_critical(tmp_path, capsys):
    theta = tmp_path / "t.edges"
    theta.write_text(format_edgelist(F.theta()))
    _, rep = _json(capsys, ["color", str(theta), "--strategy", "blocks+1"])
    assert rep["result"]["certificate"]["colors_used"] <= 3 and rep["result"]["proper"]
    c4 = tmp_path / "c4.edges"
    c4.write_text(format_edgelist(F.cycle(4)))
    _, rep = _json(capsys, ["critical", str(c4), "--chain"])
    assert rep["result"]["critical"] and rep["result"]["degree2"] == [0, 1, 2, 3]
    assert rep["result"]["chain"]["degenerate"]


def test_every_certificate_re_verifies(tmp_path, capsys):
    g = tmp_path / "g.edges"
    g.write_text(format_edgelist(F.k4_chain()))
    for strategy in ("augmented", "parts+1", "blocks+1", "list"):
        main(["color", str(g), "--strategy", strategy])
        cert = tmp_path / f"{strategy}.json"
        cert.write_text(capsys.readouterr().out)
        assert main(["verify", str(g), str(cert)]) == 0
        capsys.readouterr()


def test_generate_output_parses(capsys):
    assert main(["generate", "--middle", "block4,triangle"]) == 0
    g = parse_edgelist(capsys.readouterr().out)
    assert g.n == 4 + 2 + 1 + 2
    assert main(["generate", "--middle", "hexagon"]) == 2
    assert main(["generate", "--terminals", "4,x"]) == 1
    capsys.readouterr()


def test_timing_is_opt_in(tmp_path, capsys):
    g = tmp_path / "g.edges"
    g.write_text(format_edgelist(F.theta()))
    _, rep = _json(capsys, ["cutsets", str(g)])
    assert "timing_s" not in rep
    _, rep = _json(capsys, ["cutsets", str(g), "--timing"])
    assert rep["timing_s"] >= 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cutdecomp", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "cutsets" in proc.stdout

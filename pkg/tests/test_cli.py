import json
import subprocess
import sys

import pytest

from ldp12.cli import main
from ldp12.corpus import reflexive_catalogue, write_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_polygon(tmp_path, vertices, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"vertices": vertices}))
    return str(path)


def test_verify_triangle(tmp_path, capsys):
    path = write_polygon(tmp_path, [[0, -1], [3, 2], [-1, 2]])
    code, out = run(capsys, "verify", path, "--per-cone")
    report = json.loads(out)
    assert code == 0
    assert report["lhs"] == "18" and report["rhs"] == "18"
    assert report["nvol"] == "12" and report["nvol_dual"] == "6"
    assert all(report[k] for k in ("global_identity_ok", "cone_identity_ok", "decomposition_ok", "twelve_ok"))
    assert len(report["per_cone"]) == 3
    cone = next(c for c in report["per_cone"] if c["V"] == 8)
    assert cone["a"] == 3 and cone["lhs_direct"] == "6" and cone["rhs_triangles"] == ["1/2", "1/2"]
    assert ["0", "-1/2"] in report["dual"]["vertices"]


def test_verify_square(tmp_path, capsys):
    path = write_polygon(tmp_path, [[1, 1], [-1, 1], [-1, -1], [1, -1]])
    code, out = run(capsys, "verify", path)
    report = json.loads(out)
    assert code == 0 and report["rhs"] == "12" and report["reflexive"] is True
    assert "per_cone" not in report


def test_verify_trace_reduction(tmp_path, capsys):
    path = write_polygon(tmp_path, [[0, -1], [3, 2], [-1, 2]])
    code, out = run(capsys, "verify", path, "--trace-reduction")
    traces = json.loads(out)["reduction_traces"]
    assert code == 0
    assert any(t and t[0]["V"] == 8 for t in traces)


@pytest.mark.parametrize(
    "vertices, message",
    [
        ([[2, 4], [-1, 0], [0, -1]], "vertex not primitive"),
        ([[1, 0], [0, 1], [1, 1]], "origin is not an interior point"),
        ([[0, 0], [1, 1], [2, 2]], "degenerate polygon"),
    ],
)
def test_verify_bad_input(tmp_path, capsys, vertices, message):
    code, out = run(capsys, "verify", write_polygon(tmp_path, vertices))
    assert code == 2
    assert message in json.loads(out)["error"]


def test_verify_unreadable_file(tmp_path, capsys):
    code, out = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in json.loads(out)["error"]


def test_verify_whole_catalogue(tmp_path, capsys):
    path = tmp_path / "catalogue.ndjson"
    write_corpus(reflexive_catalogue(), path)
    code, out = run(capsys, "verify", str(path))
    reports = json.loads(out)
    assert code == 0
    assert len(reports) == 16 and all(r["rhs"] == "12" for r in reports)


def test_cone_of_volume_eight(capsys):
    code, out = run(capsys, "cone", "3", "2", "-1", "2")
    r = json.loads(out)
    assert code == 0
    assert (r["V"], r["a"], r["w"]) == (8, 3, [1, 1])
    assert r["lhs_direct"] == r["rhs"] == r["lhs_closed_form"] == "6"
    assert r["m_sigma"] == ["0", "-1/2"]
    assert r["functionals"] == [[-1, -1], [0, -1], [1, -2]]


def test_cone_unimodular(capsys):
    code, out = run(capsys, "cone", "1", "0", "0", "1")
    r = json.loads(out)
    assert code == 0
    assert r["lhs_direct"] == r["rhs"] == r["lhs_closed_form"] == "0"
    assert r["interior_points"] == []


def test_cone_trace(capsys):
    code, out = run(capsys, "cone", "1", "0", "5", "8", "--trace-reduction")
    first = json.loads(out)["reduction"][0]
    assert code == 0
    assert (first["case"], first["V"], first["a"], first["V_hat"], first["a_hat"], first["delta"]) == (
        "I", 8, 3, 5, 3, "18/5"
    )
    assert first["ok"] is True


@pytest.mark.parametrize("args", [("3", "2", "0", "-1"), ("2", "0", "0", "1"), ("1", "0", "2", "0")])
def test_cone_bad_generators(capsys, args):
    code, out = run(capsys, "cone", *args)
    assert code == 2 and "error" in json.loads(out)


def test_batch(capsys, tmp_path):
    out_path = tmp_path / "batch.ndjson"
    code, out = run(capsys, "batch", "--seed", "7", "--count", "100", "--bound", "10", "--out", str(out_path))
    summary = json.loads(out)
    assert code == 0
    assert summary["pass"] == 100 and summary["fail"] == 0
    # min_rhs is "12" exactly when a reflexive polygon was drawn
    assert (summary["min_rhs"] == "12") == (summary["reflexive"] > 0)
    assert len(out_path.read_text().splitlines()) == 100


def test_batch_is_deterministic(capsys):
    _, first = run(capsys, "batch", "--seed", "3", "--count", "20", "--bound", "6")
    _, second = run(capsys, "batch", "--seed", "3", "--count", "20", "--bound", "6")
    assert first == second


def test_batch_empty(capsys):
    code, out = run(capsys, "batch", "--count", "0")
    assert code == 0 and json.loads(out) == {"pass": 0, "fail": 0}


@pytest.mark.parametrize("flags", [("--count", "-1"), ("--bound", "0"), ("--max-vertices", "2")])
def test_batch_bad_parameters(capsys, flags):
    code, _ = run(capsys, "batch", *flags)
    assert code == 2


def test_dedekind(capsys):
    assert run(capsys, "dedekind", "3", "8") == (0, "1/16\n")
    assert run(capsys, "dedekind", "8", "3") == (0, "-1/18\n")
    code, out = run(capsys, "dedekind", "2", "4")
    assert code == 2 and "gcd" in json.loads(out)["error"]


def test_svg_bad_path(tmp_path, capsys):
    path = write_polygon(tmp_path, [[0, -1], [3, 2], [-1, 2]])
    code, out = run(capsys, "svg", path, "--what", "dual", "--out", str(tmp_path / "no" / "x.svg"))
    assert code == 2 and "cannot write" in json.loads(out)["error"]


def test_module_entry_point(tmp_path):
    path = write_polygon(tmp_path, [[0, -1], [3, 2], [-1, 2]])
    done = subprocess.run([sys.executable, "-m", "ldp12", "verify", path], capture_output=True, text=True)
    assert done.returncode == 0
    assert json.loads(done.stdout)["ok"] is True

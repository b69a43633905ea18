"""End-to-end command-line flows against small known graphs."""

from __future__ import annotations

import json

import pytest

from streamcolor.cli import main, read_coloring_file

K4_FILE = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"

DELTA_METRIC_KEYS = {
    "n", "m", "ell", "r", "passes", "colors_used",
    "peak_stored_edges", "max_class_degree", "aborted", "seed",
}
ARB_METRIC_KEYS = {
    "n", "m", "ell", "k", "passes", "colors_used",
    "per_class_out_degree", "peak_stored_edges", "stalled", "seed",
}


@pytest.fixture
def k4_path(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(K4_FILE)
    return str(path)


@pytest.fixture
def star6_path(tmp_path):
    path = tmp_path / "star6.txt"
    path.write_text("6 5\n" + "".join(f"0 {i}\n" for i in range(1, 6)))
    return str(path)


@pytest.fixture
def c5_path(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    return str(path)


def test_gen_writes_header_then_edges(tmp_path, capsys):
    out = tmp_path / "k4.txt"
    assert main(["gen", "--family", "complete", "--n", "4", "-o", str(out)]) == 0
    assert out.read_text() == K4_FILE
    assert "n=4 m=6 max_degree=3" in capsys.readouterr().out


def test_gen_is_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    args = ["gen", "--family", "gnm", "--n", "32", "--m", "64", "--seed", "5"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_rejects_gnm_without_m(tmp_path, capsys):
    code = main(["gen", "--family", "gnm", "--n", "8", "-o", str(tmp_path / "x")])
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_maxdeg(k4_path, capsys):
    assert main(["maxdeg", "-i", k4_path]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_maxdeg_missing_file(tmp_path, capsys):
    assert main(["maxdeg", "-i", str(tmp_path / "nope.txt")]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_edge_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 1\n9 1\n")
    assert main(["maxdeg", "-i", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_color_delta_full_flow(k4_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    met = tmp_path / "met.json"
    code = main([
        "color-delta", "-i", k4_path, "--delta", "3", "--epsilon", "0.5",
        "--c", "1", "--seed", "0", "-o", str(col), "--metrics", str(met),
    ])
    assert code == 0
    assert col.read_text() == "0 2\n1 3\n2 4\n3 1\n"
    payload = json.loads(met.read_text())
    assert set(payload) == DELTA_METRIC_KEYS
    assert payload["colors_used"] == 4
    assert payload["passes"] == 1
    assert not payload["aborted"]
    assert "with 4 colors (ell=1, r=11, passes=1)" in capsys.readouterr().out


def test_color_delta_measures_delta_when_omitted(k4_path, tmp_path):
    col = tmp_path / "col.txt"
    code = main([
        "color-delta", "-i", k4_path, "--epsilon", "0.5", "--c", "1",
        "--seed", "0", "-o", str(col),
    ])
    assert code == 0
    assert col.read_text() == "0 2\n1 3\n2 4\n3 1\n"  # measured bound matches --delta 3


def test_color_delta_abort_exit_code(k4_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    met = tmp_path / "met.json"
    code = main([
        "color-delta", "-i", k4_path, "--delta", "0", "--epsilon", "100",
        "--c", "0.1", "--seed", "0", "-o", str(col), "--metrics", str(met),
    ])
    assert code == 3
    assert not col.exists()
    assert "abort: palette exhausted at vertex 1" in capsys.readouterr().err
    payload = json.loads(met.read_text())
    assert payload["aborted"] is True
    assert payload["colors_used"] == 0


def test_rerun_is_byte_identical(k4_path, tmp_path):
    outs = []
    for tag in ("one", "two"):
        col = tmp_path / f"col-{tag}.txt"
        met = tmp_path / f"met-{tag}.json"
        args = [
            "color-delta", "-i", k4_path, "--delta", "3", "--epsilon", "0.5",
            "--c", "1", "--seed", "7", "-o", str(col), "--metrics", str(met),
        ]
        assert main(args) == 0
        outs.append((col.read_bytes(), met.read_bytes()))
    assert outs[0] == outs[1]


def test_verify_proper_and_tampered(k4_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    assert main([
        "color-delta", "-i", k4_path, "--delta", "3", "--epsilon", "0.5",
        "--c", "1", "--seed", "0", "-o", str(col),
    ]) == 0
    assert main(["verify", "-i", k4_path, "-c", str(col)]) == 0
    assert capsys.readouterr().out.strip().endswith("proper")

    lines = col.read_text().splitlines()
    lines[1] = "1 2"  # vertex 1 now collides with vertex 0
    col.write_text("\n".join(lines) + "\n")
    assert main(["verify", "-i", k4_path, "-c", str(col)]) == 1
    out = capsys.readouterr().out
    assert "conflict: 0 1 color=2" in out
    assert "improper: 1 conflicting edges" in out


def test_verify_tolerates_comments_and_blanks(k4_path, tmp_path):
    col = tmp_path / "col.txt"
    col.write_text("# hand-written\n\n0 2\n1 3\n2 4\n3 1\n")
    assert main(["verify", "-i", k4_path, "-c", str(col)]) == 0


def test_verify_rejects_partial_coloring(k4_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    col.write_text("0 2\n1 3\n")
    assert main(["verify", "-i", k4_path, "-c", str(col)]) == 2
    assert "missing a vertex" in capsys.readouterr().err


def test_read_coloring_file_roundtrip(tmp_path):
    path = tmp_path / "col.txt"
    path.write_text("0 5\n1 0\n2 5\n")
    coloring = read_coloring_file(str(path), 3)
    assert coloring.assignment == [5, 0, 5]


def test_peel_layers_file(star6_path, tmp_path, capsys):
    out = tmp_path / "layers.txt"
    code = main(["peel", "-i", star6_path, "--alpha", "1", "--gamma", "0.5", "-o", str(out)])
    assert code == 0
    assert out.read_text() == "0 2\n1 1\n2 1\n3 1\n4 1\n5 1\n"
    assert "k=2 layers (threshold=2, passes=2)" in capsys.readouterr().out


def test_peel_stall_exit_code(c5_path, tmp_path, capsys):
    out = tmp_path / "layers.txt"
    code = main(["peel", "-i", c5_path, "--alpha", "0", "--gamma", "0.5", "-o", str(out)])
    assert code == 3
    assert not out.exists()
    assert "stall: peeling stalled in round 1" in capsys.readouterr().err


def test_color_arb_full_flow(k4_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    met = tmp_path / "met.json"
    code = main([
        "color-arb", "-i", k4_path, "--alpha", "2", "--epsilon", "0.5",
        "--c", "1", "--seed", "0", "-o", str(col), "--metrics", str(met),
    ])
    assert code == 0
    assert col.read_text() == "0 3\n1 2\n2 1\n3 0\n"
    payload = json.loads(met.read_text())
    assert set(payload) == ARB_METRIC_KEYS
    assert payload["k"] == 1
    assert payload["colors_used"] == 4
    assert payload["stalled"] is False
    assert "with 4 colors (ell=1, k=1, passes=1)" in capsys.readouterr().out


def test_color_arb_stall_writes_partial_metrics(c5_path, tmp_path, capsys):
    col = tmp_path / "col.txt"
    met = tmp_path / "met.json"
    code = main([
        "color-arb", "-i", c5_path, "--alpha", "0", "--epsilon", "0.5",
        "--c", "1", "--seed", "0", "-o", str(col), "--metrics", str(met),
    ])
    assert code == 3
    assert not col.exists()
    assert "stall:" in capsys.readouterr().err
    payload = json.loads(met.read_text())
    assert payload["stalled"] is True
    assert payload["k"] == 1
    assert payload["colors_used"] == 0


def test_oracle_arboricity_and_degeneracy(tmp_path, capsys):
    path = tmp_path / "petersen.txt"
    assert main(["gen", "--family", "petersen", "--n", "10", "-o", str(path)]) == 0
    capsys.readouterr()
    assert main(["oracle", "arboricity", "-i", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["oracle", "degeneracy", "-i", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_oracle_greedy_reverse_degeneracy(tmp_path, capsys):
    path = tmp_path / "petersen.txt"
    main(["gen", "--family", "petersen", "--n", "10", "-o", str(path)])
    capsys.readouterr()
    col = tmp_path / "greedy.txt"
    code = main([
        "oracle", "greedy", "-i", str(path),
        "--order", "reverse-degeneracy", "-o", str(col),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "greedy used" in out
    coloring = read_coloring_file(str(col), 10)
    assert coloring.colors_used <= 4  # degeneracy 3 plus one
    assert main(["verify", "-i", str(path), "-c", str(col)]) == 0


def test_sweep_command(tmp_path, capsys):
    spec = tmp_path / "sweep.json"
    spec.write_text(json.dumps({
        "runs": [{
            "family": "complete", "n": 5, "algorithm": "delta",
            "epsilon": 0.5, "c": 1.0, "seeds": [0, 1],
        }],
    }))
    out_dir = tmp_path / "results"
    assert main(["sweep", "-s", str(spec), "-o", str(out_dir)]) == 0
    assert (out_dir / "summary.csv").exists()
    assert "summary.csv" in capsys.readouterr().out


def test_sweep_requires_output_dir(tmp_path, capsys):
    spec = tmp_path / "sweep.json"
    spec.write_text(json.dumps({"runs": []}))
    assert main(["sweep", "-s", str(spec)]) == 2
    assert "output directory" in capsys.readouterr().err

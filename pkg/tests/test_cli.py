from pathlib import Path

import pytest

from signedline.cli import fit_exponent, main
from signedline.fileio import emit_graph, parse_drawing, parse_graph
from signedline.generators import random_complete, rng_for
from signedline.patterns import generate, parse_pattern


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


TRIANGLE = "sg 3\n0 1 +\n1 2 +\n0 2 -\n"


class TestDecide:
    def test_oracle_on_hub_triangle(self, tmp_path, capsys):
        path = write(tmp_path, "f23.sg", emit_graph(generate(parse_pattern("f2:3"))))
        code, out, _ = run(capsys, "decide", path, "--oracle")
        assert code == 1
        assert "not drawable, 24 orderings tested" in out

    def test_oracle_certificate_reverifies_via_check(self, tmp_path, capsys):
        graph_path = write(tmp_path, "tri.sg", TRIANGLE)
        cert_path = str(tmp_path / "tri.draw")
        code, out, _ = run(capsys, "decide", graph_path, "--oracle", "-o", cert_path)
        assert code == 0
        assert out.startswith("drawable")
        code, out, _ = run(capsys, "check", graph_path, cert_path, "--exact")
        assert code == 0
        assert "valid" in out

    def test_complete_on_all_positive_clique(self, tmp_path, capsys):
        n = 5
        edges = "\n".join(f"{u} {v} +" for u in range(n) for v in range(u + 1, n))
        path = write(tmp_path, "k5.sg", f"sg {n}\n{edges}\n")
        code, out, _ = run(capsys, "decide", path, "--complete")
        assert code == 0
        drawing = parse_drawing(out[out.index("draw ") :])
        assert sorted(p[0] for p in drawing.points) == list(range(n))

    def test_complete_with_chordless_square_witness(self, tmp_path, capsys):
        pos = {(0, 1), (1, 2), (2, 3), (0, 3)}
        lines = [
            f"{u} {v} {'+' if (u, v) in pos else '-'}"
            for u in range(5)
            for v in range(u + 1, 5)
        ]
        path = write(tmp_path, "c4.sg", "sg 5\n" + "\n".join(lines) + "\n")
        code, out, _ = run(capsys, "decide", path, "--complete")
        assert code == 1
        assert "chordless positive cycle" in out

    def test_complete_rejects_incomplete_graph(self, tmp_path, capsys):
        path = write(tmp_path, "sparse.sg", "sg 3\n0 1 +\n")
        code, _, err = run(capsys, "decide", path, "--complete")
        assert code == 2
        assert "0 and 2 share no edge" in err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "bad.sg", "sg 3\n0 9 +\n")
        code, _, err = run(capsys, "decide", path, "--oracle")
        assert code == 2
        assert "line 2" in err


class TestCheck:
    def test_violations_are_printed(self, tmp_path, capsys):
        graph_path = write(tmp_path, "g.sg", TRIANGLE)
        drawing_path = write(tmp_path, "d.draw", "draw 3 1\n0 0\n1 5\n2 3\n")
        code, out, _ = run(capsys, "check", graph_path, drawing_path)
        assert code == 1
        assert "0: pos 1 at d2=25 vs neg 2 at d2=9" in out

    def test_float_mode(self, tmp_path, capsys):
        graph_path = write(tmp_path, "g.sg", TRIANGLE)
        drawing_path = write(tmp_path, "d.draw", "draw 3 1\n0 0.0\n1 1.5\n2 4.0\n")
        code, out, _ = run(capsys, "check", graph_path, drawing_path, "--float")
        assert code == 0

    def test_all_negative_any_points(self, tmp_path, capsys):
        graph_path = write(tmp_path, "g.sg", "sg 3\n0 1 -\n1 2 -\n0 2 -\n")
        drawing_path = write(tmp_path, "d.draw", "draw 3 2\n0 0 0\n1 5 1\n2 1 7\n")
        code, out, _ = run(capsys, "check", graph_path, drawing_path)
        assert code == 0


class TestGen:
    def test_writes_graph_and_dot(self, tmp_path, capsys):
        out_path = tmp_path / "nt.sg"
        code, _, _ = run(capsys, "gen", "neg-triangle", str(out_path), "--dot")
        assert code == 0
        g = parse_graph(out_path.read_text())
        assert g.n == 5 and len(g.neg_edges) == 4 and len(g.pos_edges) == 6
        dot = (tmp_path / "nt.dot").read_text()
        assert dot.count("[style=dashed]") == 4
        assert dot.count(" -- ") == 10

    def test_stdout_mode(self, capsys):
        code, out, _ = run(capsys, "gen", "f1:4,2", "-")
        assert code == 0
        g = parse_graph(out)
        assert len(g.pos_edges) == 4 and len(g.neg_edges) == 2

    def test_f3_counts(self, tmp_path, capsys):
        out_path = tmp_path / "f3.sg"
        code, _, _ = run(capsys, "gen", "f3:3", str(out_path))
        assert code == 0
        g = parse_graph(out_path.read_text())
        assert (g.n, len(g.pos_edges), len(g.neg_edges)) == (6, 6, 6)

    def test_bad_parameters_exit_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "gen", "f1:5,3", str(tmp_path / "x.sg"))
        assert code == 2
        assert "k <= n/2" in err


class TestClassify:
    def test_all_negative_triangle(self, tmp_path, capsys):
        path = write(tmp_path, "g.sg", "sg 3\n0 1 -\n1 2 -\n0 2 -\n")
        code, out, _ = run(capsys, "classify", path)
        assert code == 0
        assert "balanced: no" in out
        assert "clusterizable: yes" in out
        assert "line-drawable: yes" in out
        assert "draw 3 1" in out  # integerized certificate

    def test_hub_triangle_all_no(self, tmp_path, capsys):
        path = write(tmp_path, "g.sg", emit_graph(generate(parse_pattern("f2:3"))))
        code, out, _ = run(capsys, "classify", path)
        assert code == 0
        assert "balanced: no" in out
        assert "clusterizable: no" in out
        assert "line-drawable: no" in out

    def test_all_positive_path(self, tmp_path, capsys):
        path = write(tmp_path, "g.sg", "sg 3\n0 1 +\n1 2 +\n")
        code, out, _ = run(capsys, "classify", path)
        assert code == 0
        assert "balanced: yes" in out and "clusterizable: yes" in out
        assert "line-drawable: yes" in out

    def test_certificate_coordinates_are_nonnegative_integers(self, tmp_path, capsys):
        path = write(tmp_path, "g.sg", TRIANGLE)
        code, out, _ = run(capsys, "classify", path)
        assert code == 0
        drawing = parse_drawing(out[out.index("draw ") :])
        assert all(p[0] >= 0 and p[0].denominator == 1 for p in drawing.points)


class TestBench:
    def test_zero_trials_header_only(self, capsys):
        code, out, _ = run(capsys, "bench", "--sizes", "10,20", "--trials", "0")
        assert code == 0
        assert out == "n,trial,micros\n"

    def test_csv_shape_and_output_file(self, tmp_path, capsys):
        csv_path = tmp_path / "t.csv"
        code, _, _ = run(
            capsys, "bench", "--sizes", "10,20", "--trials", "2", "--seed", "7",
            "-o", str(csv_path),
        )
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "n,trial,micros"
        assert len(lines) == 5
        ns = [int(line.split(",")[0]) for line in lines[1:]]
        assert ns == [10, 10, 20, 20]

    def test_seeded_instances_are_reproducible(self):
        a = random_complete(12, rng_for("s", 12, 0))
        b = random_complete(12, rng_for("s", 12, 0))
        assert a == b
        c = random_complete(12, rng_for("s", 12, 1))
        assert a != c


def test_fit_exponent_recovers_quadratic():
    samples = [(n, 3 * n * n) for n in (250, 500, 1000, 2000)]
    assert abs(fit_exponent(samples) - 2.0) < 1e-9

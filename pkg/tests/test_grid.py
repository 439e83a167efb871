from fractions import Fraction

import pytest

from signedline.core import Drawing, SignedGraph, check_valid
from signedline.generators import random_signed, rng_for
from signedline.grid import integerize, rationalize
from signedline.oracle import decide_line_bruteforce
from signedline.patterns import (
    _neg_cluster_minus_cluster_vertex,
    _neg_triangle_minus_triangle_vertex,
)


def path_graph():
    return SignedGraph.from_edges(3, pos=[(0, 1)], neg=[(1, 2)])


class TestIntegerize:
    def test_halves_scale_to_integers(self):
        g = path_graph()
        d = Drawing.line([0, Fraction(1, 2), 2])
        out = integerize(g, d)
        assert [p[0] for p in out.points] == [0, 1, 4]
        assert check_valid(g, out).valid

    def test_negative_thirds_shift_up(self):
        g = path_graph()
        d = Drawing.line([Fraction(-1, 3), 0, Fraction(1, 2)])
        out = integerize(g, d)
        assert [p[0] for p in out.points] == [0, 2, 5]
        assert check_valid(g, out).valid

    def test_integer_drawing_with_zero_min_unchanged(self):
        g = path_graph()
        d = Drawing.line([0, 1, 4])
        out = integerize(g, d)
        assert [p[0] for p in out.points] == [0, 1, 4]

    def test_rejects_float_and_invalid_inputs(self):
        g = path_graph()
        with pytest.raises(ValueError, match="exact rational"):
            integerize(g, Drawing.line([0.0, 0.5, 2.0]))
        with pytest.raises(ValueError, match="not valid"):
            integerize(g, Drawing.line([0, 2, 3]))

    def test_preserves_validity_and_order_on_random_drawables(self):
        for seed in range(60):
            g = random_signed(6, rng_for("grid-int", seed), p_edge=0.6)
            result = decide_line_bruteforce(g)
            if not result.drawable:
                continue
            out = integerize(g, result.drawing)
            assert check_valid(g, out).valid
            assert all(isinstance(p[0], int) and p[0] >= 0 for p in out.points)
            before = [p[0] for p in result.drawing.points]
            after = [p[0] for p in out.points]
            for u in range(g.n):
                for v in range(g.n):
                    assert (before[u] < before[v]) == (after[u] < after[v])

    def test_two_dimensional_fixture(self):
        g, d = _neg_triangle_minus_triangle_vertex(digits=0)
        out = integerize(g, d)
        assert check_valid(g, out).valid
        assert all(isinstance(c, int) and c >= 0 for p in out.points for c in p)


class TestRationalize:
    def test_exactly_representable_floats_unchanged(self):
        g = path_graph()
        d = Drawing.line([0.0, 0.5, 2.0])
        out = rationalize(g, d)
        assert out is not None
        assert [p[0] for p in out.points] == [0, Fraction(1, 2), 2]

    def test_requires_float_valid_input(self):
        g = path_graph()
        with pytest.raises(ValueError, match="not valid"):
            rationalize(g, Drawing.line([0.0, 2.0, 3.0]))

    def test_perturbed_square_fixture_recovers(self):
        g, d = _neg_triangle_minus_triangle_vertex(digits=0)
        noisy = Drawing(2, tuple(
            tuple(float(c) + (1e-9 if (i + j) % 2 else -1e-9) for j, c in enumerate(p))
            for i, p in enumerate(d.points)
        ))
        out = rationalize(g, noisy)
        assert out is not None
        assert out.is_exact
        assert check_valid(g, out).valid

    def test_pentagon_fixture_float_cast_recovers(self):
        g, d = _neg_cluster_minus_cluster_vertex(digits=60)
        cast = Drawing(2, tuple(tuple(float(c) for c in p) for p in d.points))
        out = rationalize(g, cast)
        assert out is not None
        assert check_valid(g, out).valid

    def test_sub_grid_margins_never_rationalize(self):
        # Valid in floats, but every coordinate sits far below the finest
        # grid step, so each rounding collapses the points together.
        g = path_graph()
        d = Drawing.line([0.0, 1e-40, 3e-40])
        assert check_valid(g, d).valid
        assert rationalize(g, d, depth=1, max_depth=64) is None

    def test_random_drawable_float_casts_recover(self):
        for seed in range(40):
            g = random_signed(6, rng_for("grid-rat", seed), p_edge=0.6)
            result = decide_line_bruteforce(g)
            if not result.drawable:
                continue
            cast = Drawing.line([float(p[0]) for p in result.drawing.points])
            out = rationalize(g, cast)
            assert out is not None
            assert check_valid(g, out).valid

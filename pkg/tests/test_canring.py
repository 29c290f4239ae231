"""Graded pieces, ideal kernels, pointwise multiplication, Petri dichotomy."""

import numpy as np

from curvecones import algebra as alg
from curvecones import canring, monomials as mono
from curvecones.rng import Stream

P = 1000003

# Riemann-Roch oracles, frozen: dim I(n) = C(g-1+n, n) - (2n-1)(g-1)
EXPECTED_IDEAL_DIMS = {4: {2: 1, 3: 5, 4: 14}, 5: {2: 3, 3: 15, 4: 42}}
EXPECTED_RING_DIMS = {4: {1: 4, 2: 9, 3: 15, 4: 21}, 5: {1: 5, 2: 12, 3: 20, 4: 28}}


class TestDimensions:
    def test_ring_dims_match_riemann_roch(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            for n in (1, 2, 3, 4):
                assert ctx.piece(n).dim == EXPECTED_RING_DIMS[ctx.g][n]

    def test_ideal_dims(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            for n in (2, 3, 4):
                assert ctx.ideal(n).dim == EXPECTED_IDEAL_DIMS[ctx.g][n]

    def test_ideal_confirmed_on_holdout(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            for n in (2, 3, 4):
                main = ctx.ideal(n)
                hold = canring.ideal_piece_from_holdout(ctx, n)
                assert hold.dim == main.dim
                stacked = np.concatenate([main.basis, hold.basis])
                assert alg.rank(stacked, P) == main.dim

    def test_ideal_vanishes_at_points(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            for n in (2, 3, 4):
                for row in ctx.ideal(n).basis:
                    assert ctx.vanishes_on_curve(row, n)


class TestMultiplication:
    def test_identity(self, ctx4):
        one = canring.RingClass(0, np.ones(len(ctx4.panel), dtype=np.int64))
        b = ctx4.class_of_linear(np.array([1, 2, 3, 4]))
        assert ctx4.multiply(one, b).values.tolist() == b.values.tolist()

    def test_ideal_elements_evaluate_to_zero(self, ctx4):
        q = ctx4.ideal(2).basis[0]
        cls = ctx4.class_of_form(q, 2)
        assert not cls.values.any()

    def test_associativity_on_random_triples(self, ctx4):
        stream = Stream(5, "assoc")
        for _ in range(100):
            a = ctx4.class_of_linear(stream.field_vec(P, 4))
            b = ctx4.class_of_linear(stream.field_vec(P, 4))
            c = ctx4.class_of_linear(stream.field_vec(P, 4))
            left = ctx4.multiply(ctx4.multiply(a, b), c)
            right = ctx4.multiply(a, ctx4.multiply(b, c))
            assert left.values.tolist() == right.values.tolist()

    def test_coords_roundtrip(self, ctx4):
        stream = Stream(6, "coords")
        piece = ctx4.piece(3)
        coeffs = stream.field_vec(P, mono.count(4, 3))
        values = ctx4.class_of_form(coeffs, 3).values
        coords = ctx4.coords(3, values)
        rebuilt = piece.eval_matrix[:, piece.basis_cols] @ coords % P
        assert rebuilt.tolist() == values.tolist()

    def test_degree_cap_enforced(self, ctx4):
        import pytest
        a = canring.RingClass(4, np.ones(len(ctx4.panel), dtype=np.int64))
        b = canring.RingClass(3, np.ones(len(ctx4.panel), dtype=np.int64))
        with pytest.raises(ValueError):
            ctx4.multiply(a, b)

    def test_evaluation_interpolation_roundtrip(self, ctx4):
        # reduce a coefficient vector on the holdout panel, re-interpolate,
        # and compare classes on the main panel
        stream = Stream(8, "roundtrip")
        coeffs = stream.field_vec(P, mono.count(4, 2))
        hold_vals = ctx4.eval_on_holdout(coeffs, 2)
        e_hold = mono.eval_matrix(ctx4.holdout, 4, 2, P)
        x, _ = alg.solve_consistent(e_hold, hold_vals, P)
        main_a = ctx4.class_of_form(coeffs, 2).values
        main_b = ctx4.class_of_form(x, 2).values
        assert main_a.tolist() == main_b.tolist()


class TestIdealStructure:
    def test_degree_shift_containment(self, ctx4, ctx5):
        # I(m) times the linear piece stays inside I(m+1)
        for ctx in (ctx4, ctx5):
            for m in (2, 3):
                target = ctx.ideal(m + 1)
                for row in ctx.ideal(m).basis:
                    for k in range(ctx.g):
                        unit = np.zeros(ctx.g, dtype=np.int64)
                        unit[k] = 1
                        prod = mono.mul_forms(unit, 1, row, m, ctx.g, P)
                        assert ctx.in_ideal(prod, m + 1)

    def test_petri_dichotomy(self, ctx4, ctx5):
        assert ctx4.petri_check() is False
        assert ctx5.petri_check() is True

    def test_petri_rank_value(self, ctx5):
        # the 5 x 3 products span the full 15-dimensional cubic ideal piece
        i2 = ctx5.ideal(2)
        products = []
        for k in range(5):
            unit = np.zeros(5, dtype=np.int64)
            unit[k] = 1
            for q in i2.basis:
                products.append(mono.mul_forms(unit, 1, q, 2, 5, P))
        assert alg.rank(np.stack(products), P) == 15

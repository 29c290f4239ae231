"""Pencils: cutting functionals, quotient cubics, cup Grams."""

import numpy as np
import pytest

from curvecones import algebra as alg, monomials as mono, net as nt, pencil as pc
from curvecones.errors import InadmissiblePencil
from curvecones.rng import Stream

P = 1000003


def random_pencil(ctx, stream):
    while True:
        try:
            return pc.build_pencil(ctx, stream.field_mat(P, 2, ctx.g))
        except InadmissiblePencil:
            continue


class TestBuildPencil:
    def test_generic_codimension_one(self, ctx4):
        pen = random_pencil(ctx4, Stream(1, "bp"))
        assert pen.admissible
        # product space has dimension 2 * dim R_2 - g = 14 inside the
        # 15-dimensional cubic piece
        piece2 = ctx4.piece(2)
        basis2 = piece2.eval_matrix[:, piece2.basis_cols]
        rows = []
        for k in range(2):
            svals = ctx4.panel @ pen.v[k] % P
            rows.append((basis2 * svals[:, None] % P).T)
        coords = ctx4.coords_many(3, np.concatenate(rows))
        assert alg.rank(coords, P) == 14

    def test_rank_deficient_rejected(self, ctx4):
        v = np.array([[1, 2, 3, 4], [2, 4, 6, 8]], dtype=np.int64)
        with pytest.raises(InadmissiblePencil):
            pc.build_pencil(ctx4, v)

    def test_base_point_rejected(self, ctx4):
        # two sections vanishing at a panel point share a base point; the
        # codimension test alone cannot see it, the panel scan must
        forms = alg.kernel_basis(ctx4.panel[0].reshape(1, 4), P)
        with pytest.raises(InadmissiblePencil):
            pc.build_pencil(ctx4, forms[:2])

    def test_vbar_kills_products(self, ctx4):
        pen = random_pencil(ctx4, Stream(2, "bp"))
        stream = Stream(3, "q")
        piece2 = ctx4.piece(2)
        for s in pen.v:
            q = stream.field_vec(P, piece2.dim)
            qvals = piece2.eval_matrix[:, piece2.basis_cols] @ q % P
            svals = ctx4.panel @ s % P
            assert pc.vbar_value(ctx4, pen, svals * qvals % P) == 0


class TestPsiCubic:
    def test_factors_through_quotient(self, ctx4):
        pen = random_pencil(ctx4, Stream(4, "psi"))
        stream = Stream(5, "t")
        for _ in range(5):
            s = (stream.field(P) * pen.v[0]
                 + stream.field(P) * pen.v[1]) % P
            a = stream.field_vec(P, 4)
            b = stream.field_vec(P, 4)
            assert pc.psi_trilinear(ctx4, pen, s, a, b) == 0

    def test_symmetric_on_random_triples(self, ctx4):
        pen = random_pencil(ctx4, Stream(6, "psi"))
        stream = Stream(7, "t")
        for _ in range(20):
            a, b, c = (stream.field_vec(P, 4) for _ in range(3))
            vals = {pc.psi_trilinear(ctx4, pen, *perm)
                    for perm in ((a, b, c), (a, c, b), (b, a, c),
                                 (b, c, a), (c, a, b), (c, b, a))}
            assert len(vals) == 1

    def test_cubic_coeffs_match_trilinear(self, ctx4):
        pen = random_pencil(ctx4, Stream(8, "psi"))
        psi = pc.psi_cubic(ctx4, pen)
        stream = Stream(9, "y")
        units = []
        for col in pen.complement_cols:
            e = np.zeros(4, dtype=np.int64)
            e[col] = 1
            units.append(e)
        for _ in range(5):
            y = stream.field_vec(P, 2)
            w = (y[0] * units[0] + y[1] * units[1]) % P
            direct = pc.psi_trilinear(ctx4, pen, w, w, w)
            via = mono.form_eval_one(psi.coeffs, y, 2, 3, P)
            assert direct == via


class TestCupGram:
    def test_symmetric_and_kernel_contains_pencil(self, ctx4):
        pen = random_pencil(ctx4, Stream(10, "cg"))
        stream = Stream(11, "w")
        cg = pc.cup_gram(ctx4, pen, stream.field_vec(P, 4))
        assert (cg.gram == cg.gram.T).all()
        assert not (cg.gram @ pen.v.T % P).any()

    def test_generic_corank_two_with_kernel_equal_pencil(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            pen = random_pencil(ctx, Stream(12, "cg"))
            cg = pc.cup_gram(ctx, pen, Stream(13, "w").field_vec(P, ctx.g))
            assert pc.corank(cg.gram, P) == 2
            kern = alg.kernel_basis(cg.gram, P)
            assert alg.rank(np.concatenate([pen.v, kern]), P) == 2

    def test_corank_never_below_two(self, ctx4):
        stream = Stream(14, "dich")
        for _ in range(12):
            pen = random_pencil(ctx4, stream.spawn("p"))
            cg = pc.cup_gram(ctx4, pen, stream.field_vec(P, 4))
            assert pc.corank(cg.gram, P) >= 2

    def test_polar_identity(self, ctx4):
        # the Gram built through ring multiplication agrees with the
        # independently assembled trilinear evaluator
        pen = random_pencil(ctx4, Stream(15, "cg"))
        stream = Stream(16, "w")
        w = stream.field_vec(P, 4)
        cg = pc.cup_gram(ctx4, pen, w)
        for _ in range(6):
            s = stream.field_vec(P, 4)
            t = stream.field_vec(P, 4)
            assert int(s @ cg.gram @ t % P) \
                == pc.psi_trilinear(ctx4, pen, w, s, t)

    def test_scalar_robustness(self, ctx4):
        pen = random_pencil(ctx4, Stream(17, "cg"))
        w = Stream(18, "w").field_vec(P, 4)
        base = pc.corank(pc.cup_gram(ctx4, pen, w).gram, P)
        scaled = pc.corank(pc.cup_gram(ctx4, pen, 7 * w % P).gram, P)
        assert base == scaled


class TestHessianMembership:
    def test_agrees_with_vertex_restriction_test(self, ctx4):
        stream = Stream(19, "hm")
        agreements = 0
        while agreements < 10:
            pen = random_pencil(ctx4, stream.spawn(f"p{agreements}"))
            w = stream.field_vec(P, 4)
            full = np.concatenate([pen.v, w[None, :]])
            if alg.rank(full, P) != 3:
                continue
            member = pc.hessian_psi_membership(ctx4, pen, w)
            net_obj = nt.build_net(ctx4, full, with_gamma=False)
            assert member == net_obj.in_d
            agreements += 1

    def test_engineered_degenerate_agrees_on_both_tests(self, ctx4):
        from curvecones import cone as cn
        net_obj = cn.degenerate_net(ctx4, Stream(20, "deg"))
        pen = pc.build_pencil(ctx4, net_obj.w[:2])
        assert pc.hessian_psi_membership(ctx4, pen, net_obj.w[2]) is True
        assert net_obj.in_d is True

    def test_hessian_determinant_has_degree_genus_minus_two(self, ctx4, ctx5):
        # the discriminant of the quotient form is a form of degree g - 2
        # in the quotient coordinates: fit it exactly and cross-validate
        for ctx in (ctx4, ctx5):
            pen = random_pencil(ctx, Stream(21, "deg" + str(ctx.g)))
            m = ctx.g - 2
            units = []
            for col in pen.complement_cols:
                e = np.zeros(ctx.g, dtype=np.int64)
                e[col] = 1
                units.append(np.array(e))
            stream = Stream(22, "y")
            ys, vals = [], []
            for _ in range(mono.count(m, m) + 6):
                y = stream.field_vec(P, m)
                w = np.zeros(ctx.g, dtype=np.int64)
                for k in range(m):
                    w = (w + int(y[k]) * units[k]) % P
                gram = pc.quotient_gram(
                    ctx, pen, pc.cup_gram(ctx, pen, w).gram)
                ys.append(y)
                vals.append(alg.det(gram, P))
            e = mono.eval_matrix(np.stack(ys[:-3]), m, m, P)
            coeffs, _ = alg.solve_consistent(e, np.array(vals[:-3]), P)
            assert coeffs.any()
            for y, v in zip(ys[-3:], vals[-3:]):
                assert mono.form_eval_one(coeffs, y, m, m, P) == v

"""Nets: vertex, degeneracy test, plane image, membership oracles."""

import numpy as np
import pytest

from curvecones import algebra as alg, cone as cn, curve as cv
from curvecones import monomials as mono, net as nt
from curvecones.errors import (InVertex, OnGammaFiber, RankDeficientW)
from curvecones.rng import Stream

P = 1000003


class TestBuildNet:
    def test_vertex_annihilates(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            net = nt.random_net(ctx, Stream(1, f"n{ctx.g}"))
            assert net.wperp.shape == (ctx.g - 3, ctx.g)
            assert not (net.w @ net.wperp.T % P).any()

    def test_rank_deficient_rejected(self, ctx4):
        w = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]],
                     dtype=np.int64)
        with pytest.raises(RankDeficientW):
            nt.build_net(ctx4, w)

    def test_base_point_net_is_degenerate(self, ctx4, ctx5):
        # a net of sections through a curve point has that base point, and
        # base-point nets sit inside the degeneracy divisor
        for ctx in (ctx4, ctx5):
            forms = alg.kernel_basis(ctx.panel[0].reshape(1, ctx.g), P)
            net = nt.build_net(ctx, forms[:3], with_gamma=False)
            assert net.in_b is True
            assert net.in_d is True

    def test_restriction_dimension_identity(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            net = nt.random_net(ctx, Stream(2, f"n{ctx.g}"))
            res = nt.res_matrix(ctx, net.wperp)
            expected = (ctx.g - 2) * (ctx.g - 3) // 2
            assert res.shape == (expected, expected)
            assert ctx.ideal(2).dim == expected

    def test_genus4_membership_is_vertex_on_quadric(self, ctx4):
        # independent oracle: evaluate the unique ideal quadric at the vertex
        quadric = ctx4.ideal(2).basis[0]
        stream = Stream(3, "w")
        for _ in range(8):
            w = stream.field_mat(P, 3, 4)
            if alg.rank(w, P) != 3:
                continue
            net = nt.build_net(ctx4, w, with_gamma=False)
            on_quadric = mono.form_eval_one(quadric, net.wperp[0], 4, 2, P) \
                == 0
            assert net.in_d == on_quadric
        # engineered membership: vertex taken on the quadric itself
        chart = cv.ruling_chart(ctx4.curve)
        a, b = chart.line_at(stream.field(P))
        vertex = (a + 3 * b) % P
        net = nt.net_from_vertex(ctx4, vertex)
        assert mono.form_eval_one(quadric, net.wperp[0], 4, 2, P) == 0
        assert net.in_d is True

    def test_degeneracy_certificate_contains_vertex(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            net = cn.degenerate_net(ctx, Stream(4, f"d{ctx.g}"))
            cert = net.d_certificate
            assert cert is not None
            restricted = mono.restrict(cert, 2, ctx.g, net.wperp.T, P)
            assert not restricted.any()


class TestGamma:
    def test_unique_fit_and_holdout(self, ctx4, ctx5):
        for ctx in (ctx4, ctx5):
            net = nt.random_net(ctx, Stream(5, f"g{ctx.g}"))
            gamma = nt.gamma_equation(ctx, net)
            assert gamma.degree == 2 * ctx.g - 2
            for pt in ctx.holdout[:10]:
                u = net.w @ pt % P
                assert mono.form_eval_one(gamma.coeffs, u, 3,
                                          gamma.degree, P) == 0

    def test_base_point_net_has_no_plane_image(self, ctx4):
        from curvecones.errors import AmbiguousFit
        forms = alg.kernel_basis(ctx4.panel[0].reshape(1, 4), P)
        net = nt.build_net(ctx4, forms[:3], with_gamma=False)
        with pytest.raises(AmbiguousFit):
            nt.gamma_equation(ctx4, net)


class TestOracles:
    def test_well_defined_modulo_pencil(self, ctx4):
        net = nt.random_net(ctx4, Stream(6, "o"))
        stream = Stream(7, "b")
        b = stream.field_vec(P, 4)
        wit = nt.oracle_witness(ctx4, net, b)
        base_b = int(wit.b @ wit.y % P)
        x = net.wperp[0]
        base_x = int(x @ wit.y % P)
        for _ in range(5):
            shift = (stream.field(P) * wit.v_b[0]
                     + stream.field(P) * wit.v_b[1]) % P
            y2 = (wit.y + shift) % P
            assert int(wit.b @ y2 % P) == base_b
            assert int(x @ y2 % P) == base_x

    def test_scalar_robustness(self, ctx4):
        net = nt.random_net(ctx4, Stream(8, "o"))
        b = Stream(9, "b").field_vec(P, 4)
        assert nt.fw_oracle(ctx4, net, b) == nt.fw_oracle(ctx4, net,
                                                          11 * b % P)

    def test_random_points_off_the_cone(self, ctx4):
        net = nt.random_net(ctx4, Stream(10, "o"))
        stream = Stream(11, "b")
        hits = 0
        for _ in range(20):
            if nt.fw_oracle(ctx4, net, stream.field_vec(P, 4)):
                hits += 1
        assert hits == 0

    def test_curve_point_rejected_as_gamma_fiber(self, ctx4):
        net = nt.random_net(ctx4, Stream(12, "o"))
        with pytest.raises(OnGammaFiber):
            nt.fw_oracle(ctx4, net, ctx4.panel[3])

    def test_vertex_rejected(self, ctx4):
        net = nt.random_net(ctx4, Stream(13, "o"))
        with pytest.raises(InVertex):
            nt.fw_oracle(ctx4, net, net.wperp[0])

    def test_polar_requires_vertex_vector(self, ctx4):
        net = nt.random_net(ctx4, Stream(14, "o"))
        b = Stream(15, "b").field_vec(P, 4)
        with pytest.raises(ValueError):
            nt.polar_oracle(ctx4, net, np.zeros(4, dtype=np.int64), b)
        with pytest.raises(ValueError):
            nt.polar_oracle(ctx4, net, np.array([1, 2, 3, 4]), b)

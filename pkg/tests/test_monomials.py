"""Monomial order, derivatives, products, substitution."""

import numpy as np

from curvecones import monomials as mono
from curvecones.rng import Stream

P = 1000003


class TestOrder:
    def test_lex_descending_with_z0_first(self):
        expo = mono.exponents(4, 2)
        assert expo[0] == (2, 0, 0, 0)
        assert expo[1] == (1, 1, 0, 0)
        assert expo[-1] == (0, 0, 0, 2)
        assert list(expo) == sorted(expo, reverse=True)

    def test_counts(self):
        assert len(mono.exponents(4, 4)) == 35
        assert len(mono.exponents(5, 4)) == 70
        assert mono.count(3, 6) == 28
        assert mono.count(3, 8) == 45


class TestCalculus:
    def test_partial_of_monomial(self):
        # d/dz1 of z0 z1^2 = 2 z0 z1
        c = np.zeros(mono.count(4, 3), dtype=np.int64)
        c[mono.index_map(4, 3)[(1, 2, 0, 0)]] = 1
        d = mono.partial(c, 1, 4, 3, P)
        expected = np.zeros(mono.count(4, 2), dtype=np.int64)
        expected[mono.index_map(4, 2)[(1, 1, 0, 0)]] = 2
        assert d.tolist() == expected.tolist()

    def test_product_matches_pointwise(self):
        stream = Stream(1, "prod")
        a = stream.field_vec(P, mono.count(4, 2))
        b = stream.field_vec(P, mono.count(4, 1))
        prod = mono.mul_forms(a, 2, b, 1, 4, P)
        pts = stream.field_mat(P, 6, 4)
        lhs = mono.form_eval(prod, pts, 4, 3, P)
        rhs = mono.form_eval(a, pts, 4, 2, P) \
            * mono.form_eval(b, pts, 4, 1, P) % P
        assert lhs.tolist() == rhs.tolist()

    def test_restrict_matches_substitution(self):
        stream = Stream(2, "restrict")
        f = stream.field_vec(P, mono.count(5, 4))
        basis = stream.field_mat(P, 5, 3)
        g = mono.restrict(f, 4, 5, basis, P)
        ys = stream.field_mat(P, 8, 3)
        direct = mono.form_eval(f, ys @ basis.T % P, 5, 4, P)
        via = mono.form_eval(g, ys, 3, 4, P)
        assert direct.tolist() == via.tolist()

    def test_pairs_roundtrip(self):
        stream = Stream(3, "pairs")
        f = stream.field_vec(P, mono.count(4, 3))
        pairs = mono.form_to_pairs(f, 4, 3)
        back = mono.form_from_pairs(pairs, 4, 3, P)
        assert back.tolist() == f.tolist()

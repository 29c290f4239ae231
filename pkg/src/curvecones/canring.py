"""Evaluation model of the canonical coordinate ring.

Sections of the n-th power of the canonical bundle are represented by their
value vectors on a fixed panel of rational curve points.  The panel always
exceeds the degree of any section of weight up to six, so a section is zero
exactly when its value vector is, multiplication is pointwise, and graded
pieces of the ideal fall out as kernels of monomial evaluation matrices.
A disjoint holdout panel backs independent recomputation of every kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import curve as cv
from . import monomials as mono
from .errors import InsufficientPoints, RankDeficiency


def ring_dim(g: int, n: int) -> int:
    """Riemann-Roch dimension of the degree-n graded piece."""
    if n == 0:
        return 1
    if n == 1:
        return g
    return (2 * n - 1) * (g - 1)


def ideal_dim(g: int, n: int) -> int:
    return mono.count(g, n) - ring_dim(g, n)


@dataclass
class GradedPiece:
    n: int
    dim: int
    eval_matrix: np.ndarray      # panel x monomials
    basis_cols: list[int]        # pivot monomial columns spanning the piece
    coord_rows: np.ndarray       # row indices giving an invertible minor
    coord_inv: np.ndarray        # inverse of that minor


@dataclass
class IdealPiece:
    n: int
    dim: int
    basis: np.ndarray            # dim x monomial-count, echelon-normalized


@dataclass
class RingClass:
    """Residue class in the degree-n piece, as panel values."""
    degree: int
    values: np.ndarray


class CurveContext:
    """A curve with its point panels and graded-ring evaluation tables."""

    def __init__(self, curve: cv.CurveModel, points: list[np.ndarray],
                 main_size: int | None = None,
                 holdout_size: int | None = None):
        self.curve = curve
        self.g = curve.genus
        self.p = curve.prime
        main_size = main_size or 4 * mono.count(self.g, 4)
        holdout_size = holdout_size or 2 * mono.count(self.g, 4)
        if len(points) < main_size + holdout_size:
            raise InsufficientPoints(
                f"need {main_size + holdout_size} points, got {len(points)}")
        pts = np.stack(points[: main_size + holdout_size]) % self.p
        self.panel = pts[:main_size]
        self.holdout = pts[main_size:]
        self._pieces: dict[int, GradedPiece] = {}
        self._ideals: dict[int, IdealPiece] = {}
        self._tangents: dict[tuple, cv.TangentData] = {}
        for n in (1, 2, 3, 4):
            self.piece(n)

    # -- graded pieces ----------------------------------------------------

    def piece(self, n: int) -> GradedPiece:
        if n not in self._pieces:
            e = mono.eval_matrix(self.panel, self.g, n, self.p)
            expected = ring_dim(self.g, n)
            _, col_pivots = alg.rref(e, self.p)
            if len(col_pivots) != expected:
                raise RankDeficiency(
                    f"panel separates a {len(col_pivots)}-dimensional space "
                    f"in degree {n}, expected {expected}")
            sub = e[:, col_pivots]
            _, row_pivots = alg.rref(sub.T, self.p)
            minor = sub[row_pivots]
            self._pieces[n] = GradedPiece(
                n=n, dim=expected, eval_matrix=e, basis_cols=col_pivots,
                coord_rows=np.array(row_pivots, dtype=np.int64),
                coord_inv=alg.inverse(minor, self.p))
        return self._pieces[n]

    def ideal(self, n: int) -> IdealPiece:
        if n not in self._ideals:
            self._ideals[n] = ideal_piece(self, n)
        return self._ideals[n]

    def coords(self, n: int, values: np.ndarray) -> np.ndarray:
        """Coordinates of a class with respect to the chosen monomial basis."""
        piece = self.piece(n)
        return piece.coord_inv @ values[piece.coord_rows] % self.p

    def coords_many(self, n: int, value_rows: np.ndarray) -> np.ndarray:
        piece = self.piece(n)
        return (value_rows[:, piece.coord_rows] @ piece.coord_inv.T) % self.p

    # -- classes ----------------------------------------------------------

    def class_of_form(self, coeffs: np.ndarray, n: int) -> RingClass:
        return RingClass(n, mono.form_eval(coeffs, self.panel, self.g, n,
                                           self.p))

    def class_of_linear(self, w: np.ndarray) -> RingClass:
        return RingClass(1, self.panel @ np.asarray(w, dtype=np.int64)
                         % self.p)

    def multiply(self, a: RingClass, b: RingClass) -> RingClass:
        """Pointwise product; faithful for total degree up to six."""
        if a.degree + b.degree > 6:
            raise ValueError("product degree exceeds the faithful range")
        return RingClass(a.degree + b.degree, a.values * b.values % self.p)

    def tangent(self, pt: np.ndarray) -> cv.TangentData:
        key = tuple(int(v) for v in pt)
        if key not in self._tangents:
            self._tangents[key] = cv.tangent_vector(self.curve, pt)
        return self._tangents[key]

    # -- checks -----------------------------------------------------------

    def eval_on_holdout(self, coeffs: np.ndarray, n: int) -> np.ndarray:
        return mono.form_eval(coeffs, self.holdout, self.g, n, self.p)

    def vanishes_on_curve(self, coeffs: np.ndarray, n: int) -> bool:
        """Zero on both panels; for degree <= 6 this certifies ideal
        membership because the panels outnumber the section degree."""
        on_main = mono.form_eval(coeffs, self.panel, self.g, n, self.p)
        return not on_main.any() and not self.eval_on_holdout(coeffs, n).any()

    def in_ideal(self, coeffs: np.ndarray, n: int) -> bool:
        basis = self.ideal(n).basis
        stacked = np.concatenate([basis, np.asarray(coeffs)[None, :]], axis=0)
        return alg.rank(stacked, self.p) == basis.shape[0]

    def petri_check(self) -> bool:
        """True when degree-2 ideal elements generate the degree-3 piece."""
        i2 = self.ideal(2)
        products = []
        for k in range(self.g):
            unit = np.zeros(self.g, dtype=np.int64)
            unit[k] = 1
            for q in i2.basis:
                products.append(mono.mul_forms(unit, 1, q, 2, self.g, self.p))
        rank = alg.rank(np.stack(products), self.p)
        return rank == self.ideal(3).dim


def ideal_piece(ctx: CurveContext, n: int) -> IdealPiece:
    """Kernel of the degree-n evaluation matrix, dimension-checked against
    the Riemann-Roch count."""
    if not 2 <= n <= 4:
        raise ValueError("ideal pieces are kept for degrees 2 through 4")
    if ctx.panel.shape[0] < 2 * mono.count(ctx.g, n):
        raise InsufficientPoints("panel too small to cut the ideal piece")
    basis = alg.kernel_basis(ctx.piece(n).eval_matrix, ctx.p)
    expected = ideal_dim(ctx.g, n)
    if basis.shape[0] != expected:
        raise RankDeficiency(
            f"ideal piece in degree {n} has dimension {basis.shape[0]}, "
            f"expected {expected}")
    return IdealPiece(n=n, dim=expected, basis=basis)


def ideal_piece_from_holdout(ctx: CurveContext, n: int) -> IdealPiece:
    """Same kernel computed on the disjoint verification panel."""
    e = mono.eval_matrix(ctx.holdout, ctx.g, n, ctx.p)
    basis = alg.kernel_basis(e, ctx.p)
    return IdealPiece(n=n, dim=basis.shape[0], basis=basis)


def build_context(curve: cv.CurveModel, points: list[np.ndarray] | None = None,
                  main_size: int | None = None,
                  holdout_size: int | None = None) -> CurveContext:
    main = main_size or 4 * mono.count(curve.genus, 4)
    hold = holdout_size or 2 * mono.count(curve.genus, 4)
    if points is None:
        points = cv.sample_points(curve, main + hold)
    return CurveContext(curve, points, main, hold)

"""Pencils of canonical sections and their cup-product geometry.

A two-dimensional subspace V of the space of sections determines a
hyperplane of the cubic graded piece, namely the image of V times the
quadratic piece.  The functional vbar cutting that hyperplane induces a
cubic form on the quotient by V whose polar quadrics are the cup-product
Gram matrices used everywhere downstream: corank 2 is the generic law, and
corank jumps detect the degeneracy divisor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import monomials as mono
from .canring import CurveContext
from .errors import InadmissiblePencil


@dataclass
class PencilData:
    v: np.ndarray                  # 2 x g echelon-normalized basis
    vbar: np.ndarray               # functional on cubic-piece coordinates
    complement_cols: tuple[int, ...]
    admissible: bool = True


@dataclass
class PsiCubic:
    pencil: PencilData
    coeffs: np.ndarray             # cubic form on the quotient coordinates


@dataclass
class CupGram:
    w: np.ndarray
    gram: np.ndarray               # symmetric g x g


def corank(m: np.ndarray, p: int) -> int:
    return m.shape[1] - alg.rank(m, p)


def _triple_product_values(ctx: CurveContext, a: np.ndarray, b: np.ndarray,
                           c: np.ndarray) -> np.ndarray:
    p = ctx.p
    va = ctx.panel @ a % p
    vb = ctx.panel @ b % p
    vc = ctx.panel @ c % p
    return va * vb % p * vc % p


def build_pencil(ctx: CurveContext, v: np.ndarray) -> PencilData:
    """Pencil data with its cutting functional.

    Admissibility demands both that the product space has codimension
    exactly one in the cubic piece and that no panel point is a common zero
    of the pencil; the codimension test alone does not see base points.
    """
    p = ctx.p
    v = np.asarray(v, dtype=np.int64) % p
    vr, pivots = alg.rref(v, p)
    if v.shape != (2, ctx.g) or len(pivots) != 2:
        raise InadmissiblePencil("pencil basis must have rank 2")
    vr = vr[:2]
    panel_vals = ctx.panel @ vr.T % p
    base_hits = ~panel_vals.any(axis=1)
    if base_hits.any():
        raise InadmissiblePencil("pencil has a base point on the panel")
    hold_vals = ctx.holdout @ vr.T % p
    if (~hold_vals.any(axis=1)).any():
        raise InadmissiblePencil("pencil has a base point on the panel")
    piece2 = ctx.piece(2)
    basis2 = piece2.eval_matrix[:, piece2.basis_cols]
    rows = []
    for k in range(2):
        svals = ctx.panel @ vr[k] % p
        rows.append(basis2 * svals[:, None] % p)
    products = np.concatenate(rows, axis=1).T  # (2 d2) x panel
    coords = ctx.coords_many(3, products)
    functionals = alg.kernel_basis(coords, p)
    if functionals.shape[0] != 1:
        raise InadmissiblePencil(
            f"product space has codimension {functionals.shape[0]}, "
            "expected 1")
    vbar = alg.normalize_scalar(functionals[0], p)
    complement = tuple(c for c in range(ctx.g) if c not in pivots)
    return PencilData(v=vr, vbar=vbar, complement_cols=complement)


def vbar_value(ctx: CurveContext, pencil: PencilData,
               cubic_values: np.ndarray) -> int:
    """Apply the cutting functional to a cubic-piece class (panel values)."""
    return int(pencil.vbar @ ctx.coords(3, cubic_values) % ctx.p)


def psi_trilinear(ctx: CurveContext, pencil: PencilData, a: np.ndarray,
                  b: np.ndarray, c: np.ndarray) -> int:
    """Symmetric trilinear evaluator on section coefficient vectors."""
    return vbar_value(ctx, pencil, _triple_product_values(ctx, a, b, c))


def psi_cubic(ctx: CurveContext, pencil: PencilData) -> PsiCubic:
    """Cubic form induced on the chosen complement of the pencil."""
    g = ctx.g
    p = ctx.p
    m = g - 2
    units = []
    for col in pencil.complement_cols:
        e = np.zeros(g, dtype=np.int64)
        e[col] = 1
        units.append(e)
    coeffs = np.zeros(mono.count(m, 3), dtype=np.int64)
    for idx, expo in enumerate(mono.exponents(m, 3)):
        picks = [k for k in range(m) for _ in range(expo[k])]
        a, b, c = (units[picks[0]], units[picks[1]], units[picks[2]])
        value = psi_trilinear(ctx, pencil, a, b, c)
        if expo[picks[0]] == 3:
            mult = 1
        elif max(expo) == 2:
            mult = 3
        else:
            mult = 6
        coeffs[idx] = value * mult % p
    return PsiCubic(pencil=pencil, coeffs=coeffs)


def cup_gram(ctx: CurveContext, pencil: PencilData, w: np.ndarray) -> CupGram:
    """Polar Gram matrix gram(s, t) = vbar(w s t) on section coefficients.

    Symmetric by construction; its kernel always contains the pencil, and
    equals it exactly away from the degeneracy divisor.
    """
    p = ctx.p
    g = ctx.g
    w = np.asarray(w, dtype=np.int64) % p
    if alg.rank(np.concatenate([pencil.v, w[None, :]]), p) != 3:
        raise InadmissiblePencil("lift vector lies in the pencil")
    wvals = ctx.panel @ w % p
    rows = []
    pairs = []
    for i in range(g):
        for j in range(i, g):
            prod = wvals * ctx.panel[:, i] % p * ctx.panel[:, j] % p
            rows.append(prod)
            pairs.append((i, j))
    coords = ctx.coords_many(3, np.stack(rows))
    values = coords @ pencil.vbar % p
    gram = np.zeros((g, g), dtype=np.int64)
    for (i, j), val in zip(pairs, values):
        gram[i, j] = gram[j, i] = int(val)
    return CupGram(w=w, gram=gram)


def quotient_gram(ctx: CurveContext, pencil: PencilData,
                  gram: np.ndarray) -> np.ndarray:
    """Gram of the induced quadric on the complement coordinates."""
    cols = list(pencil.complement_cols)
    return gram[np.ix_(cols, cols)]


def hessian_psi_membership(ctx: CurveContext, pencil: PencilData,
                           w: np.ndarray) -> bool:
    """Vanishing of the Hessian determinant of the quotient cubic at w.

    Equivalent to the full Gram having corank at least 3, and must agree
    with the vertex-restriction test on the spanned net.
    """
    cg = cup_gram(ctx, pencil, w)
    q = quotient_gram(ctx, pencil, cg.gram)
    return alg.det(q, ctx.p) == 0

"""Dense homogeneous forms over a fixed monomial basis.

A degree-n form in g variables is a coefficient vector indexed by the
monomial list `exponents(g, n)`.  The order is graded, then lexicographic
on exponent tuples with z0 > z1 > ... > z_{g-1}, so z0^n comes first.
Every serialized coefficient array in the package uses this order.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from . import algebra


@lru_cache(maxsize=None)
def exponents(g: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of total degree n in g variables, lex-descending."""
    def gen(nvars: int, total: int):
        if nvars == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for tail in gen(nvars - 1, total - head):
                yield (head,) + tail
    return tuple(gen(g, n))


@lru_cache(maxsize=None)
def index_map(g: int, n: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(exponents(g, n))}


def count(g: int, n: int) -> int:
    return comb(g - 1 + n, n)


def eval_matrix(pts: np.ndarray, g: int, n: int, p: int) -> np.ndarray:
    """Matrix of monomial values, rows = points, columns = exponents(g, n)."""
    pts = np.asarray(pts, dtype=np.int64) % p
    expo = np.array(exponents(g, n), dtype=np.int64)
    npts = pts.shape[0]
    # power tables per variable: powers[k][:, e] = pts[:, k] ** e
    powers = []
    for k in range(g):
        tab = np.ones((npts, n + 1), dtype=np.int64)
        for e in range(1, n + 1):
            tab[:, e] = tab[:, e - 1] * pts[:, k] % p
        powers.append(tab)
    out = np.ones((npts, expo.shape[0]), dtype=np.int64)
    for k in range(g):
        out = out * powers[k][:, expo[:, k]] % p
    return out


def form_eval(coeffs: np.ndarray, pts: np.ndarray, g: int, n: int,
              p: int) -> np.ndarray:
    """Values of the form at each point (row) of pts."""
    pts = np.atleast_2d(np.asarray(pts, dtype=np.int64))
    return eval_matrix(pts, g, n, p) @ np.asarray(coeffs, dtype=np.int64) % p


def form_eval_one(coeffs: np.ndarray, pt: np.ndarray, g: int, n: int,
                  p: int) -> int:
    return int(form_eval(coeffs, pt.reshape(1, -1), g, n, p)[0])


@lru_cache(maxsize=None)
def _partial_table(g: int, n: int, var: int) -> tuple[np.ndarray, np.ndarray]:
    """Source indices and multipliers realizing d/d z_var as a linear map."""
    src = []
    mult = []
    lower = index_map(g, n - 1)
    rows = []
    for i, e in enumerate(exponents(g, n)):
        if e[var] == 0:
            continue
        target = list(e)
        target[var] -= 1
        rows.append(lower[tuple(target)])
        src.append(i)
        mult.append(e[var])
    return (np.array([rows, src], dtype=np.int64),
            np.array(mult, dtype=np.int64))


def partial(coeffs: np.ndarray, var: int, g: int, n: int, p: int
            ) -> np.ndarray:
    """Coefficient vector of the partial derivative, degree n-1."""
    idx, mult = _partial_table(g, n, var)
    out = np.zeros(count(g, n - 1), dtype=np.int64)
    out[idx[0]] = np.asarray(coeffs, dtype=np.int64)[idx[1]] * mult % p
    return out


def gradient(coeffs: np.ndarray, g: int, n: int, p: int) -> list[np.ndarray]:
    return [partial(coeffs, k, g, n, p) for k in range(g)]


def mul_forms(c1: np.ndarray, n1: int, c2: np.ndarray, n2: int, g: int,
              p: int) -> np.ndarray:
    """Product of two forms as a degree n1+n2 coefficient vector."""
    e1 = np.array(exponents(g, n1), dtype=np.int64)
    e2 = np.array(exponents(g, n2), dtype=np.int64)
    target = index_map(g, n1 + n2)
    out = np.zeros(count(g, n1 + n2), dtype=np.int64)
    c1 = np.asarray(c1, dtype=np.int64)
    c2 = np.asarray(c2, dtype=np.int64)
    for i in np.nonzero(c1)[0]:
        for j in np.nonzero(c2)[0]:
            e = tuple(int(v) for v in e1[i] + e2[j])
            out[target[e]] = (out[target[e]] + int(c1[i]) * int(c2[j])) % p
    return out


def restrict(coeffs: np.ndarray, n: int, g: int, basis: np.ndarray,
             p: int) -> np.ndarray:
    """Substitute z = basis @ y; returns a degree-n form in m = basis.shape[1]
    variables.  Exact expansion through powers of the pulled-back linears."""
    basis = np.asarray(basis, dtype=np.int64) % p
    m = basis.shape[1]
    # linear forms z_k in the y variables, with cached powers up to n
    lin_pows = []
    for k in range(g):
        pows = [np.zeros(count(m, 0), dtype=np.int64)]
        pows[0][0] = 1
        current = basis[k].copy()  # degree-1 coefficients match exponents(m,1)
        lin = current % p
        acc = lin
        pows.append(acc)
        for d in range(2, n + 1):
            acc = mul_forms(acc, d - 1, lin, 1, m, p)
            pows.append(acc)
        lin_pows.append(pows)
    out = np.zeros(count(m, n), dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    for i, e in enumerate(exponents(g, n)):
        c = int(coeffs[i])
        if c == 0:
            continue
        term = None
        deg = 0
        for k in range(g):
            if e[k] == 0:
                continue
            piece = lin_pows[k][e[k]]
            if term is None:
                term, deg = piece, e[k]
            else:
                term = mul_forms(term, deg, piece, e[k], m, p)
                deg += e[k]
        out = (out + c * term) % p
    return out


def restrict_to_line(coeffs: np.ndarray, n: int, g: int, a: np.ndarray,
                     b: np.ndarray, p: int) -> np.ndarray:
    """Binary form of F(a s + b t) as coefficients over exponents(2, n)."""
    basis = np.stack([a, b], axis=1)
    return restrict(coeffs, n, g, basis, p)


def binary_to_unipoly(coeffs: np.ndarray, n: int, p: int) -> np.ndarray:
    """Dehomogenize a binary form at s = 1: polynomial in t, low degree first.

    exponents(2, n) lists (n,0), (n-1,1), ..., (0,n), i.e. ascending t-degree.
    """
    return algebra.poly_trim(np.asarray(coeffs, dtype=np.int64) % p)


def form_to_pairs(coeffs: np.ndarray, g: int, n: int) -> list:
    """JSON shape: [[exponent tuple, coefficient], ...], nonzero entries only."""
    expo = exponents(g, n)
    return [[list(expo[i]), int(c)]
            for i, c in enumerate(np.asarray(coeffs)) if int(c) != 0]


def form_from_pairs(pairs, g: int, n: int, p: int) -> np.ndarray:
    idx = index_map(g, n)
    out = np.zeros(count(g, n), dtype=np.int64)
    for e, c in pairs:
        out[idx[tuple(e)]] = int(c) % p
    return out

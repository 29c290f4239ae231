"""Exact dense linear algebra and univariate/bivariate polynomial kernels
over a prime field F_p.

Conventions used package-wide:

* matrices and vectors are numpy int64 arrays with entries reduced to [0, p);
* row reduction touches pivots in column order, so echelon output is unique;
* kernel bases follow the special-solution convention: one vector per free
  column, carrying 1 in that column and 0 in every other free column,
  ordered by free column index;
* univariate polynomials are 1-D arrays, lowest degree first, trimmed so a
  nonzero polynomial has nonzero leading entry and the zero polynomial is
  the empty array;
* bivariate polynomials are 2-D arrays, entry [i, j] the coefficient of
  x^i y^j.

The prime must stay below 2**25 so that int64 dot products of length a few
thousand cannot overflow; all arithmetic is exact.
"""

from __future__ import annotations

import numpy as np

from .errors import InconsistentSystem

MAX_PRIME_BITS = 25


def check_prime(p: int) -> None:
    """Reject moduli that break the int64 overflow budget or are even."""
    if p < 2 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if p.bit_length() > MAX_PRIME_BITS:
        raise ValueError(f"modulus too large for exact int64 kernels: {p}")
    if pow(2, p, p) != 2:
        raise ValueError(f"modulus fails the Fermat test: {p}")


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return pow(a, p - 2, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def first_nonzero(v: np.ndarray) -> int:
    """Index of the first nonzero entry, or -1 for the zero vector."""
    idx = np.nonzero(v)[0]
    return int(idx[0]) if idx.size else -1


def normalize_scalar(v: np.ndarray, p: int) -> np.ndarray:
    """Scale so the first nonzero entry is 1; zero vectors pass through."""
    v = np.asarray(v, dtype=np.int64) % p
    i = first_nonzero(v)
    if i < 0:
        return v
    return v * inv_mod(int(v[i]), p) % p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column list."""
    r = np.array(m, dtype=np.int64) % p
    rows, cols = r.shape
    pivots: list[int] = []
    lead = 0
    for c in range(cols):
        if lead >= rows:
            break
        nz = np.nonzero(r[lead:, c])[0]
        if nz.size == 0:
            continue
        j = lead + int(nz[0])
        if j != lead:
            r[[lead, j]] = r[[j, lead]]
        r[lead] = r[lead] * inv_mod(int(r[lead, c]), p) % p
        col = r[:, c].copy()
        col[lead] = 0
        r = (r - np.outer(col, r[lead])) % p
        pivots.append(c)
        lead += 1
    return r, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel, one row per free column.

    Row k has 1 in its free column and 0 in every other free column, so the
    basis is echelon with respect to the free columns and unique.
    """
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return basis


def solve_consistent(m: np.ndarray, rhs: np.ndarray, p: int
                     ) -> tuple[np.ndarray, np.ndarray]:
    """One solution of m x = rhs plus the kernel basis of m.

    Raises InconsistentSystem when rhs is outside the column space.
    """
    m = np.asarray(m, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1)
    aug = np.concatenate([m % p, rhs[:, None] % p], axis=1)
    r, pivots = rref(aug, p)
    cols = m.shape[1]
    if cols in pivots:
        raise InconsistentSystem("rhs is not in the column space")
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, cols]
    basis = np.zeros((cols - len(pivots), cols), dtype=np.int64)
    free = [c for c in range(cols) if c not in pivots]
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return x, basis


def det(m: np.ndarray, p: int) -> int:
    """Determinant by elimination with row swaps."""
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        j = c + int(nz[0])
        if j != c:
            a[[c, j]] = a[[j, c]]
            sign = -sign
        piv = int(a[c, c])
        result = result * piv % p
        inv = inv_mod(piv, p)
        below = a[c + 1:, c] * inv % p
        a[c + 1:] = (a[c + 1:] - np.outer(below, a[c])) % p
    return result * sign % p


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    aug = np.concatenate([m % p, np.eye(n, dtype=np.int64)], axis=1)
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:]


# ---------------------------------------------------------------------------
# univariate polynomials


def poly_trim(f) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(f)[0]
    if nz.size == 0:
        return np.zeros(0, dtype=np.int64)
    return f[: int(nz[-1]) + 1]


def poly_deg(f: np.ndarray) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(f) - 1


def poly_add(f, g, p: int) -> np.ndarray:
    n = max(len(f), len(g))
    out = np.zeros(n, dtype=np.int64)
    out[: len(f)] += f
    out[: len(g)] += g
    return poly_trim(out % p)


def poly_sub(f, g, p: int) -> np.ndarray:
    n = max(len(f), len(g))
    out = np.zeros(n, dtype=np.int64)
    out[: len(f)] += f
    out[: len(g)] -= g
    return poly_trim(out % p)


def poly_scale(f, c: int, p: int) -> np.ndarray:
    return poly_trim(np.asarray(f, dtype=np.int64) * (c % p) % p)


def poly_mul(f, g, p: int) -> np.ndarray:
    if len(f) == 0 or len(g) == 0:
        return np.zeros(0, dtype=np.int64)
    return poly_trim(np.convolve(f, g) % p)


def poly_divmod(f, g, p: int) -> tuple[np.ndarray, np.ndarray]:
    f = poly_trim(f)
    g = poly_trim(g)
    if len(g) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return np.zeros(0, dtype=np.int64), f
    rem = f.copy()
    q = np.zeros(len(f) - len(g) + 1, dtype=np.int64)
    inv_lead = inv_mod(int(g[-1]), p)
    for k in range(len(f) - len(g), -1, -1):
        coef = rem[k + len(g) - 1] * inv_lead % p
        if coef:
            q[k] = coef
            rem[k: k + len(g)] = (rem[k: k + len(g)] - coef * g) % p
    return poly_trim(q), poly_trim(rem)


def poly_mod(f, g, p: int) -> np.ndarray:
    return poly_divmod(f, g, p)[1]


def poly_monic(f, p: int) -> np.ndarray:
    f = poly_trim(f)
    if len(f) == 0:
        return f
    return f * inv_mod(int(f[-1]), p) % p


def poly_gcd(f, g, p: int) -> np.ndarray:
    """Monic greatest common divisor."""
    a, b = poly_trim(f), poly_trim(g)
    while len(b):
        a, b = b, poly_mod(a, b, p)
    return poly_monic(a, p)


def poly_pow_mod(base, e: int, mod, p: int) -> np.ndarray:
    result = np.ones(1, dtype=np.int64)
    base = poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def poly_eval(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly_trim(f)):
        acc = (acc * x + int(c)) % p
    return acc


def poly_eval_many(f, xs: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros(len(xs), dtype=np.int64)
    for c in reversed(poly_trim(f)):
        acc = (acc * xs + int(c)) % p
    return acc


def poly_deriv(f, p: int) -> np.ndarray:
    f = poly_trim(f)
    if len(f) <= 1:
        return np.zeros(0, dtype=np.int64)
    return poly_trim(f[1:] * np.arange(1, len(f), dtype=np.int64) % p)


def squarefree_part(f, p: int) -> np.ndarray:
    """f / gcd(f, f'), monic.  Valid while deg f < p (never an issue here)."""
    f = poly_monic(f, p)
    d = poly_gcd(f, poly_deriv(f, p), p)
    return poly_monic(poly_divmod(f, d, p)[0], p)


def _split_distinct_linear(g: np.ndarray, p: int) -> list[int]:
    """Roots of a monic product of distinct linear factors."""
    roots: list[int] = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = poly_deg(h)
        if d <= 0:
            continue
        if d == 1:
            roots.append((-int(h[0])) % p)
            continue
        a = 1
        while True:
            shifted = np.array([a, 1], dtype=np.int64)
            t = poly_pow_mod(shifted, (p - 1) // 2, h, p)
            t = poly_sub(t, np.ones(1, dtype=np.int64), p)
            d1 = poly_gcd(t, h, p)
            if 0 < poly_deg(d1) < d:
                stack.append(d1)
                stack.append(poly_divmod(h, d1, p)[0])
                break
            if poly_eval(h, (-a) % p, p) == 0:
                roots.append((-a) % p)
                stack.append(poly_divmod(
                    h, np.array([a, 1], dtype=np.int64), p)[0])
                break
            a += 1
    return roots


def distinct_roots(f, p: int) -> list[int]:
    """All roots of f in F_p, each once, sorted.

    Computed as gcd(f, x^p - x) followed by equal-degree splitting.
    """
    f = poly_trim(f)
    if len(f) == 0:
        raise ValueError("distinct_roots needs a nonzero polynomial")
    if len(f) == 1:
        return []
    xp = poly_pow_mod(np.array([0, 1], dtype=np.int64), p, f, p)
    lin = poly_gcd(poly_sub(xp, np.array([0, 1], dtype=np.int64), p), f, p)
    return sorted(_split_distinct_linear(lin, p))


def sylvester(f, g) -> np.ndarray:
    f = poly_trim(f)
    g = poly_trim(g)
    m, n = poly_deg(f), poly_deg(g)
    size = m + n
    s = np.zeros((size, size), dtype=np.int64)
    frow = f[::-1]
    grow = g[::-1]
    for i in range(n):
        s[i, i: i + m + 1] = frow
    for i in range(m):
        s[n + i, i: i + n + 1] = grow
    return s


def resultant(f, g, p: int) -> int:
    """Sylvester-matrix resultant of two nonzero univariate polynomials."""
    f = poly_trim(f)
    g = poly_trim(g)
    if len(f) == 0 or len(g) == 0:
        raise ValueError("resultant needs nonzero polynomials")
    m, n = poly_deg(f), poly_deg(g)
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return pow(int(f[0]), n, p)
    if n == 0:
        return pow(int(g[0]), m, p)
    return det(sylvester(f, g), p)


def lagrange_interpolate(xs, ys, p: int) -> np.ndarray:
    """Unique polynomial of degree < len(xs) through the given points."""
    xs = [int(x) % p for x in xs]
    ys = [int(y) % p for y in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    master = np.ones(1, dtype=np.int64)
    for x in xs:
        master = poly_mul(master, np.array([-x % p, 1], dtype=np.int64), p)
    out = np.zeros(0, dtype=np.int64)
    for x, y in zip(xs, ys):
        num = poly_divmod(master, np.array([-x % p, 1], dtype=np.int64), p)[0]
        denom = poly_eval(num, x, p)
        out = poly_add(out, poly_scale(num, y * inv_mod(denom, p) % p, p), p)
    return out


def rational_interpolate(xs, ys, p: int, num_deg: int, den_deg: int
                         ) -> tuple[np.ndarray, np.ndarray] | None:
    """Cauchy interpolation: N/D of bounded degrees through the samples.

    Solves the homogeneous conditions N(x_i) - y_i D(x_i) = 0 and returns
    (N, D) from a one-dimensional solution, or None when the degrees do not
    fit the data."""
    n_cols = num_deg + 1
    d_cols = den_deg + 1
    rows = []
    for x, y in zip(xs, ys):
        x = int(x) % p
        y = int(y) % p
        xpows = [pow(x, k, p) for k in range(max(n_cols, d_cols))]
        rows.append([xpows[k] for k in range(n_cols)]
                    + [(-y * xpows[k]) % p for k in range(d_cols)])
    kernel = kernel_basis(np.array(rows, dtype=np.int64), p)
    if kernel.shape[0] == 0:
        return None
    # over-generous degrees give polynomial multiples of the minimal pair;
    # stripping the common factor recovers it
    sol = kernel[0]
    num = poly_trim(sol[:n_cols])
    den = poly_trim(sol[n_cols:])
    if len(den) == 0 or len(num) == 0:
        return None
    common = poly_gcd(num, den, p)
    if poly_deg(common) > 0:
        num = poly_divmod(num, common, p)[0]
        den = poly_divmod(den, common, p)[0]
    return num, den


# ---------------------------------------------------------------------------
# bivariate polynomials, entry [i, j] = coefficient of x^i y^j


def p2_trim(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    if f.size == 0 or not f.any():
        return np.zeros((0, 0), dtype=np.int64)
    rows = np.nonzero(f.any(axis=1))[0]
    cols = np.nonzero(f.any(axis=0))[0]
    return f[: rows[-1] + 1, : cols[-1] + 1]


def p2_add(f, g, p: int) -> np.ndarray:
    r = max(f.shape[0], g.shape[0])
    c = max(f.shape[1], g.shape[1])
    out = np.zeros((r, c), dtype=np.int64)
    out[: f.shape[0], : f.shape[1]] += f
    out[: g.shape[0], : g.shape[1]] += g
    return p2_trim(out % p)


def p2_scale(f, c: int, p: int) -> np.ndarray:
    return p2_trim(np.asarray(f, dtype=np.int64) * (c % p) % p)


def p2_mul(f, g, p: int) -> np.ndarray:
    f = p2_trim(f)
    g = p2_trim(g)
    if f.size == 0 or g.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    out = np.zeros((f.shape[0] + g.shape[0] - 1,
                    f.shape[1] + g.shape[1] - 1), dtype=np.int64)
    for i in range(f.shape[0]):
        for j in range(f.shape[1]):
            c = int(f[i, j])
            if c:
                out[i: i + g.shape[0], j: j + g.shape[1]] = (
                    out[i: i + g.shape[0], j: j + g.shape[1]] + c * g) % p
    return out


def p2_eval_x(f: np.ndarray, a: int, p: int) -> np.ndarray:
    """Substitute x = a; returns a univariate polynomial in y."""
    f = np.asarray(f, dtype=np.int64)
    acc = np.zeros(f.shape[1], dtype=np.int64)
    for row in f[::-1]:
        acc = (acc * a + row) % p
    return poly_trim(acc)


def p2_eval(f: np.ndarray, a: int, b: int, p: int) -> int:
    return poly_eval(p2_eval_x(f, a, p), b, p)


def p2_deg_y(f: np.ndarray) -> int:
    return f.shape[1] - 1


def p2_deg_x(f: np.ndarray) -> int:
    return f.shape[0] - 1


def p2_swap(f: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(f).T)


def resultant_bivariate(f, g, p: int) -> np.ndarray:
    """Res_y of two bivariate polynomials, as a univariate polynomial in x.

    Evaluate-and-interpolate: specialize x at nodes where neither leading
    y-coefficient drops, take scalar Sylvester resultants, interpolate.
    """
    f = p2_trim(f)
    g = p2_trim(g)
    if f.size == 0 or g.size == 0:
        raise ValueError("resultant of a zero polynomial")
    dfy, dgy = p2_deg_y(f), p2_deg_y(g)
    if dfy == 0 and dgy == 0:
        return np.ones(1, dtype=np.int64)
    if dfy == 0:
        base = poly_trim(f[:, 0])
        out = np.ones(1, dtype=np.int64)
        for _ in range(dgy):
            out = poly_mul(out, base, p)
        return out
    if dgy == 0:
        base = poly_trim(g[:, 0])
        out = np.ones(1, dtype=np.int64)
        for _ in range(dfy):
            out = poly_mul(out, base, p)
        return out
    lf = poly_trim(f[:, dfy])
    lg = poly_trim(g[:, dgy])
    bound = dfy * p2_deg_x(g) + dgy * p2_deg_x(f)
    xs: list[int] = []
    ys: list[int] = []
    a = 0
    while len(xs) <= bound:
        if a >= p:
            raise ValueError("field too small for interpolation nodes")
        if poly_eval(lf, a, p) != 0 and poly_eval(lg, a, p) != 0:
            fy = p2_eval_x(f, a, p)
            gy = p2_eval_x(g, a, p)
            xs.append(a)
            ys.append(resultant(fy, gy, p))
        a += 1
    return lagrange_interpolate(xs, ys, p)

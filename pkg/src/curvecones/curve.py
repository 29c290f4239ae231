"""Canonically embedded curves of genus 4 and 5 over F_p.

Genus 4 curves are quadric-cubic complete intersections in P^3; the quadric
is required to be smooth and split, so it carries two rational rulings and
the curve is sampled by restricting the cubic to ruling lines (a cubic in
one line parameter per ruling member).  Genus 5 curves are intersections of
three quadrics in P^4, sampled by slicing with hyperplanes and eliminating
variables through resultants.

Points are projective coordinate vectors normalized so the first nonzero
coordinate is 1.  A point doubles as a covector on sections: the pairing
<b, s> = sum b_i s_i realizes evaluation of the linear form s at b.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import algebra as alg
from . import monomials as mono
from .errors import (CurveConesError, GenerationFailed, InsufficientPoints,
                     SingularPoint)
from .rng import Stream, derive_key

GENERATION_TRIES = 64
POINT_BUDGET_FACTOR = 60


def normalize_point(v: np.ndarray, p: int) -> np.ndarray:
    v = alg.normalize_scalar(v, p)
    if not v.any():
        raise ValueError("projective point cannot be zero")
    return v


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def quadric_gram(coeffs: np.ndarray, g: int, p: int) -> np.ndarray:
    """Symmetric Gram matrix M with Q(x) = x^T M x (odd characteristic)."""
    m = np.zeros((g, g), dtype=np.int64)
    half = alg.inv_mod(2, p)
    for idx, e in enumerate(mono.exponents(g, 2)):
        c = int(coeffs[idx]) % p
        if c == 0:
            continue
        vars_ = [k for k in range(g) if e[k]]
        if len(vars_) == 1:
            m[vars_[0], vars_[0]] = c
        else:
            i, j = vars_
            m[i, j] = m[j, i] = c * half % p
    return m


@dataclass(frozen=True)
class CurveModel:
    """Generators of a canonical curve; degree tags the form degree."""
    genus: int
    prime: int
    seed: int
    generators: tuple[tuple[int, tuple[int, ...]], ...]

    def generator_arrays(self) -> list[tuple[int, np.ndarray]]:
        return [(d, np.array(c, dtype=np.int64)) for d, c in self.generators]


@dataclass(frozen=True)
class TangentData:
    point: np.ndarray
    direction: np.ndarray


def on_curve(curve: CurveModel, pt: np.ndarray) -> bool:
    p = curve.prime
    g = curve.genus
    return all(
        mono.form_eval_one(np.array(c, dtype=np.int64), pt, g, d, p) == 0
        for d, c in curve.generators)


def jacobian_at(curve: CurveModel, pt: np.ndarray) -> np.ndarray:
    p = curve.prime
    g = curve.genus
    rows = []
    for d, c in curve.generator_arrays():
        rows.append([mono.form_eval_one(gr, pt, g, d - 1, p)
                     for gr in mono.gradient(c, g, d, p)])
    return np.array(rows, dtype=np.int64)


def tangent_vector(curve: CurveModel, pt: np.ndarray) -> TangentData:
    """Second spanning point of the embedded tangent line at a smooth point."""
    p = curve.prime
    if not on_curve(curve, pt):
        raise SingularPoint("point is not on the curve")
    jac = jacobian_at(curve, pt)
    if alg.rank(jac, p) != curve.genus - 2:
        raise SingularPoint(f"Jacobian rank below {curve.genus - 2}")
    kern = alg.kernel_basis(jac, p)
    if kern.shape[0] != 2:
        raise SingularPoint("tangent space is not a line")
    basis, _ = alg.rref(kern, p)
    pt_n = normalize_point(pt, p)
    for row in basis:
        if alg.normalize_scalar(row, p).tolist() != pt_n.tolist():
            return TangentData(pt_n, normalize_point(row, p))
    raise SingularPoint("tangent line collapsed onto the point")


def _binary_quadratic_roots(c20: int, c11: int, c02: int, p: int
                            ) -> list[tuple[int, int]]:
    """Projective roots (s, t) of c20 s^2 + c11 st + c02 t^2."""
    roots = []
    f = alg.poly_trim(np.array([c20, c11, c02], dtype=np.int64))
    if len(f) == 0:
        raise ValueError("zero binary quadratic")
    for t in alg.distinct_roots(f, p) if alg.poly_deg(f) >= 1 else []:
        roots.append((1, t))
    if c02 % p == 0:
        roots.append((0, 1))  # root at infinity of the s = 1 chart
    return roots


class RulingChart:
    """Rational ruling structure of the genus-4 quadric.

    The chart fixes a point q0 on the quadric, the two tangent lines through
    it, and a pencil of planes through one of them.  The residual line of
    each plane sweeps one ruling; restricting the cubic generator to a
    ruling line yields the per-parameter cubics used for point sampling.
    """

    def __init__(self, curve: CurveModel):
        if curve.genus != 4:
            raise ValueError("ruling chart requires genus 4")
        self.curve = curve
        self.p = curve.prime
        self.quadric = np.array(curve.generators[0][1], dtype=np.int64)
        self.cubic = np.array(curve.generators[1][1], dtype=np.int64)
        self.gram = quadric_gram(self.quadric, 4, self.p)
        self._build_frame()
        self._build_symbolic()

    # -- frame ----------------------------------------------------------

    def _bilinear(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(x @ self.gram @ y % self.p) * 2 % self.p

    def _quadric_value(self, x: np.ndarray) -> int:
        return int(x @ self.gram @ x % self.p)

    def _build_frame(self) -> None:
        p = self.p
        stream = Stream(derive_key(self.curve.seed, "chart"), "q0-search")
        q0 = None
        for _ in range(400):
            a = stream.field_vec(p, 4)
            b = stream.field_vec(p, 4)
            coeffs = alg.poly_trim(np.array(
                [self._quadric_value(a), self._bilinear(a, b),
                 self._quadric_value(b)], dtype=np.int64))
            if alg.poly_deg(coeffs) < 1:
                continue
            roots = alg.distinct_roots(coeffs, p)
            if roots:
                q0 = normalize_point((a + roots[0] * b) % p, p)
                break
        if q0 is None:
            raise GenerationFailed("no rational point found on the quadric")
        self.q0 = q0
        tangent = alg.kernel_basis(
            (2 * q0 @ self.gram % p).reshape(1, 4), p)
        frame, _ = alg.rref(np.concatenate([q0[None, :], tangent]), p)
        frame = frame[~(frame == 0).all(axis=1)]
        v1, v2 = frame[1], frame[2]
        q_rest = _binary_quadratic_roots(
            self._quadric_value(v1), self._bilinear(v1, v2),
            self._quadric_value(v2), p)
        if len(q_rest) != 2:
            raise GenerationFailed("tangent conic does not split; "
                                   "quadric is not rationally ruled")
        (s1, t1), (s2, t2) = q_rest
        self.d1 = normalize_point((s1 * v1 + t1 * v2) % p, p)
        self.d2 = normalize_point((s2 * v1 + t2 * v2) % p, p)
        forms = alg.kernel_basis(np.stack([self.q0, self.d1]), p)
        self.h1, self.h2 = forms[0], forms[1]

    def _build_symbolic(self) -> None:
        """Polynomial coordinates of the swept ruling line.

        w(u) completes the plane h1 + u h2; the residual line of the plane
        through q0-d1 is spanned by A(u), B(u) with polynomial entries.
        """
        p = self.p
        chosen = None
        for i in range(4):
            for j in range(i + 1, 4):
                r1 = np.zeros(4, dtype=np.int64)
                r2 = np.zeros(4, dtype=np.int64)
                r1[i] = 1
                r2[j] = 1
                if alg.rank(np.stack([self.q0, self.d1, r1, r2]), p) != 4:
                    continue
                w0, w1 = self._w_polys(r1, r2)
                rho = self._pair_poly(2 * self.q0 @ self.gram % p, w0, w1)
                if alg.poly_deg(rho) >= 0:
                    chosen = (r1, r2)
                    break
            if chosen:
                break
        if chosen is None:
            raise GenerationFailed("no usable completion frame for the chart")
        self.r1, self.r2 = chosen
        w0, w1 = self._w_polys(self.r1, self.r2)
        self._w = (w0, w1)  # w(u) = w0 + u * w1, per coordinate
        rho = self._pair_poly(2 * self.q0 @ self.gram % p, w0, w1)
        sig = self._pair_poly(2 * self.d1 @ self.gram % p, w0, w1)
        tau = self._w_quadric_poly(w0, w1)
        # A(u) = sig * q0 - rho * d1  (degree <= 1 per coordinate)
        # B(u) = tau * q0 - rho * w(u)  (degree <= 2 per coordinate)
        self.a_sym = [alg.poly_sub(alg.poly_scale(sig, int(self.q0[k]), p),
                                   alg.poly_scale(rho, int(self.d1[k]), p), p)
                      for k in range(4)]
        rho_w = [alg.poly_mul(rho, alg.poly_trim(
            np.array([w0[k], w1[k]], dtype=np.int64)), p) for k in range(4)]
        self.b_sym = [alg.poly_sub(alg.poly_scale(tau, int(self.q0[k]), p),
                                   rho_w[k], p) for k in range(4)]
        self._rho, self._sig, self._tau = rho, sig, tau
        self._line_bivariate = self._sweep_coordinates()
        self._cubic_sweep = self._form_on_sweep(self.cubic, 3)
        quad_sweep = self._form_on_sweep(self.quadric, 2)
        if quad_sweep.size:
            raise GenerationFailed("swept lines leave the quadric")

    def _w_polys(self, r1, r2):
        p = self.p
        w0 = (int(self.h1 @ r2 % p) * r1 - int(self.h1 @ r1 % p) * r2) % p
        w1 = (int(self.h2 @ r2 % p) * r1 - int(self.h2 @ r1 % p) * r2) % p
        return w0, w1

    def _pair_poly(self, row, w0, w1) -> np.ndarray:
        p = self.p
        return alg.poly_trim(np.array(
            [int(row @ w0 % p), int(row @ w1 % p)], dtype=np.int64))

    def _w_quadric_poly(self, w0, w1) -> np.ndarray:
        p = self.p
        c0 = int(w0 @ self.gram @ w0 % p)
        c1 = int(w0 @ self.gram @ w1 % p) * 2 % p
        c2 = int(w1 @ self.gram @ w1 % p)
        return alg.poly_trim(np.array([c0, c1, c2], dtype=np.int64))

    def _sweep_coordinates(self) -> list[np.ndarray]:
        """Coordinates of A(u) + t B(u) as bivariate polynomials in (u, t)."""
        coords = []
        for k in range(4):
            a = self.a_sym[k]
            b = self.b_sym[k]
            rows = max(len(a), len(b))
            f = np.zeros((rows, 2), dtype=np.int64)
            f[: len(a), 0] = a
            f[: len(b), 1] = b
            coords.append(alg.p2_trim(f))
        return coords

    def _form_on_sweep(self, coeffs: np.ndarray, deg: int) -> np.ndarray:
        """Pull a form back through (u, t) -> A(u) + t B(u)."""
        p = self.p
        out = np.zeros((0, 0), dtype=np.int64)
        for i, e in enumerate(mono.exponents(4, deg)):
            c = int(coeffs[i])
            if c == 0:
                continue
            term = np.ones((1, 1), dtype=np.int64)
            for k in range(4):
                for _ in range(e[k]):
                    term = alg.p2_mul(term, self._line_bivariate[k], p)
            out = alg.p2_add(out, alg.p2_scale(term, c, p), p)
        return out

    # -- numeric line access ---------------------------------------------

    def line_at(self, u) -> tuple[np.ndarray, np.ndarray]:
        """Spanning points of the ruling line with parameter u (None = inf)."""
        p = self.p
        if u is None:
            h = self.h2
        else:
            h = (self.h1 + u * self.h2) % p
        w = (int(h @ self.r2 % p) * self.r1
             - int(h @ self.r1 % p) * self.r2) % p
        rho = self._bilinear(self.q0, w)
        sig = self._bilinear(self.d1, w)
        tau = self._quadric_value(w)
        if rho == 0 and sig == 0:
            if tau == 0:
                raise CurveConesError("plane lies inside the quadric")
            return self.q0.copy(), self.d1.copy()
        a = (sig * self.q0 - rho * self.d1) % p
        if rho != 0:
            b = (tau * self.q0 - rho * w) % p
        else:
            b = (tau * self.d1 - sig * w) % p
        return a, b

    def param_of(self, pt: np.ndarray):
        """Pencil parameter of the plane through the fixed line and pt."""
        p = self.p
        num = int(self.h1 @ pt % p)
        den = int(self.h2 @ pt % p)
        if den == 0:
            return None
        return (-num) * alg.inv_mod(den, p) % p

    def points_on_line(self, u) -> list[np.ndarray]:
        """Curve points on the ruling line with parameter u."""
        p = self.p
        a, b = self.line_at(u)
        binary = mono.restrict_to_line(self.cubic, 3, 4, a, b, p)
        f = alg.poly_trim(binary)
        pts = []
        if alg.poly_deg(f) >= 1:
            for t in alg.distinct_roots(f, p):
                pts.append(normalize_point((a + t * b) % p, p))
        elif alg.poly_deg(f) == -1:
            # line inside the cubic surface; avoid flooding, take none
            return []
        if int(binary[-1]) % p == 0:  # t = infinity point
            cand = normalize_point(b, p)
            if on_curve(self.curve, cand):
                pts.append(cand)
        return [q for q in pts if on_curve(self.curve, q)]

    # -- exact plane sections ---------------------------------------------

    def section_poly(self, h: np.ndarray) -> np.ndarray:
        """Polynomial in u whose roots locate C intersect {h = 0} on the sweep.

        Res_t of h(A + tB) (linear in t) against the cubic restricted to the
        swept line.
        """
        p = self.p
        ha = np.zeros(0, dtype=np.int64)
        hb = np.zeros(0, dtype=np.int64)
        for k in range(4):
            ha = alg.poly_add(ha, alg.poly_scale(self.a_sym[k], int(h[k]), p), p)
            hb = alg.poly_add(hb, alg.poly_scale(self.b_sym[k], int(h[k]), p), p)
        k_arr = self._cubic_sweep
        out = np.zeros(0, dtype=np.int64)
        neg_ha = alg.poly_scale(ha, -1, p)
        for j in range(k_arr.shape[1]):
            kj = alg.poly_trim(k_arr[:, j])
            if len(kj) == 0:
                continue
            term = kj
            for _ in range(j):
                term = alg.poly_mul(term, neg_ha, p)
            for _ in range(3 - j):
                term = alg.poly_mul(term, hb, p)
            out = alg.poly_add(out, term, p)
        return out

    def section_points(self, h: np.ndarray) -> list[np.ndarray]:
        """All rational points of C intersect the plane {h = 0}."""
        p = self.p
        h = np.asarray(h, dtype=np.int64) % p
        s = self.section_poly(h)
        if alg.poly_deg(s) < 0:
            raise CurveConesError("degenerate plane sweep")
        found: dict[tuple, np.ndarray] = {}

        def try_line(u):
            a, b = self.line_at(u)
            hav = int(h @ a % p)
            hbv = int(h @ b % p)
            if hbv != 0:
                t = (-hav) * alg.inv_mod(hbv, p) % p
                cand = (a + t * b) % p
                if cand.any():
                    cand = normalize_point(cand, p)
                    if on_curve(self.curve, cand):
                        found[tuple(cand.tolist())] = cand
            elif hav == 0:
                for q in self.points_on_line(u):
                    found[tuple(q.tolist())] = q

        for u in alg.distinct_roots(s, p):
            try_line(u)
        try_line(None)
        # t = infinity candidates: h(B(u)) = 0 and the cubic kills B(u)
        hb = np.zeros(0, dtype=np.int64)
        for k in range(4):
            hb = alg.poly_add(hb, alg.poly_scale(self.b_sym[k], int(h[k]), p), p)
        k3 = alg.poly_trim(self._cubic_sweep[:, 3]) \
            if self._cubic_sweep.shape[1] > 3 else np.zeros(0, dtype=np.int64)
        if len(hb) and len(k3):
            for u in alg.distinct_roots(alg.poly_gcd(hb, k3, p), p):
                _, b = self.line_at(u)
                if b.any():
                    cand = normalize_point(b, p)
                    if on_curve(self.curve, cand) and int(h @ cand % p) == 0:
                        found[tuple(cand.tolist())] = cand
        return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# genus 5 slicing


def _quadric_by_y3(coeffs: np.ndarray, p: int) -> list[np.ndarray]:
    """Affine chart y0 = 1 of a quadric in (y0..y3), arranged by y3-degree.

    Returns [A0, A1, A2] with q = A0 + A1 y3 + A2 y3^2, each a bivariate
    array in (y1, y2).
    """
    parts = [np.zeros((3, 3), dtype=np.int64) for _ in range(3)]
    for i, e in enumerate(mono.exponents(4, 2)):
        c = int(coeffs[i]) % p
        if c == 0:
            continue
        parts[e[3]][e[1], e[2]] = (parts[e[3]][e[1], e[2]] + c) % p
    return [alg.p2_trim(a) for a in parts]


def _res_quadratics(q1, q2, p: int) -> np.ndarray:
    """Sylvester determinant of two y3-quadratics with bivariate coefficients.

    (af - cd)^2 - (ae - bd)(bf - ce) for a y3^2 + b y3 + c and
    d y3^2 + e y3 + f; spurious factors from degree drops are filtered later
    by exact point validation.
    """
    c, b, a = q1
    f, e, d = q2
    af = alg.p2_mul(a, f, p)
    cd = alg.p2_mul(c, d, p)
    ae = alg.p2_mul(a, e, p)
    bd = alg.p2_mul(b, d, p)
    bf = alg.p2_mul(b, f, p)
    ce = alg.p2_mul(c, e, p)
    t1 = alg.p2_add(af, alg.p2_scale(cd, -1, p), p)
    t2 = alg.p2_add(ae, alg.p2_scale(bd, -1, p), p)
    t3 = alg.p2_add(bf, alg.p2_scale(ce, -1, p), p)
    return alg.p2_add(alg.p2_mul(t1, t1, p),
                      alg.p2_scale(alg.p2_mul(t2, t3, p), -1, p), p)


def _genus5_section(curve: CurveModel, h: np.ndarray,
                    chart_tries: int = 4) -> list[np.ndarray]:
    """Rational points of C intersect {h = 0} for a genus-5 curve."""
    p = curve.prime
    h = np.asarray(h, dtype=np.int64) % p
    basis = alg.kernel_basis(h.reshape(1, 5), p).T  # 5 x 4
    if basis.shape[1] != 4:
        raise CurveConesError("section hyperplane is degenerate")
    key = derive_key(curve.seed, "slice-chart|" + ",".join(map(str, h)))
    stream = Stream(key, "chart")
    quads = [np.array(c, dtype=np.int64) for _, c in curve.generators]
    found: dict[tuple, np.ndarray] = {}
    for _ in range(chart_tries):
        change = stream.field_mat(p, 4, 4)
        if alg.rank(change, p) != 4:
            continue
        m = basis @ change % p
        rq = [mono.restrict(q, 2, 5, m, p) for q in quads]
        layers = [_quadric_by_y3(q, p) for q in rq]
        if any(layer[2].size == 0 for layer in layers[:2]):
            continue
        r12 = _res_quadratics(layers[0], layers[1], p)
        r13 = _res_quadratics(layers[0], layers[2], p)
        if r12.size == 0 or r13.size == 0:
            continue
        try:
            rfin = alg.resultant_bivariate(r12, r13, p)
        except ValueError:
            continue
        if alg.poly_deg(rfin) < 0:
            continue
        for y1 in alg.distinct_roots(rfin, p):
            s12 = alg.p2_eval_x(r12, y1, p)
            if alg.poly_deg(s12) < 1:
                continue
            for y2 in alg.distinct_roots(s12, p):
                qpoly = alg.poly_trim(np.array(
                    [alg.p2_eval(layers[0][0], y1, y2, p),
                     alg.p2_eval(layers[0][1], y1, y2, p),
                     alg.p2_eval(layers[0][2], y1, y2, p)], dtype=np.int64))
                if alg.poly_deg(qpoly) < 1:
                    continue
                for y3 in alg.distinct_roots(qpoly, p):
                    y = np.array([1, y1, y2, y3], dtype=np.int64)
                    x = m @ y % p
                    if not x.any():
                        continue
                    x = normalize_point(x, p)
                    if on_curve(curve, x):
                        found[tuple(x.tolist())] = x
        break
    return [found[k] for k in sorted(found)]


@lru_cache(maxsize=8)
def ruling_chart(curve: CurveModel) -> RulingChart:
    return RulingChart(curve)


def hyperplane_section(curve: CurveModel, h: np.ndarray) -> list[np.ndarray]:
    """Rational points of the curve in the hyperplane {h . z = 0}."""
    if curve.genus == 4:
        return ruling_chart(curve).section_points(h)
    return _genus5_section(curve, h)


# ---------------------------------------------------------------------------
# generation and sampling


def _draw_form(stream: Stream, g: int, n: int, p: int) -> np.ndarray:
    return stream.field_vec(p, mono.count(g, n))


def _spot_check_smooth(curve: CurveModel, pts: list[np.ndarray]) -> bool:
    p = curve.prime
    need = curve.genus - 2
    return all(alg.rank(jacobian_at(curve, q), p) == need for q in pts)


def generate_curve(genus: int, prime: int, seed: int) -> CurveModel:
    """Deterministic random canonical curve; retries until smoothness spot
    checks pass on 50 sampled points."""
    if genus not in (4, 5):
        raise ValueError(f"genus must be 4 or 5, got {genus}")
    if prime < 10**6:
        raise ValueError(f"prime must be at least 10^6, got {prime}")
    alg.check_prime(prime)
    stream = Stream(seed, f"curve-gen-g{genus}")
    for _ in range(GENERATION_TRIES):
        if genus == 4:
            q = _draw_form(stream, 4, 2, prime)
            c = _draw_form(stream, 4, 3, prime)
            gram = quadric_gram(q, 4, prime)
            if legendre(alg.det(gram, prime), prime) != 1:
                continue  # need a split smooth quadric for rational rulings
            candidate = CurveModel(4, prime, seed,
                                   ((2, tuple(int(v) for v in q)),
                                    (3, tuple(int(v) for v in c))))
        else:
            qs = [_draw_form(stream, 5, 2, prime) for _ in range(3)]
            if alg.rank(np.stack(qs), prime) != 3:
                continue
            candidate = CurveModel(5, prime, seed, tuple(
                (2, tuple(int(v) for v in q)) for q in qs))
        try:
            pts = sample_points(candidate, 50)
        except (InsufficientPoints, GenerationFailed, CurveConesError):
            continue
        if _spot_check_smooth(candidate, pts):
            return candidate
    raise GenerationFailed(
        f"no smooth curve found for genus {genus}, prime {prime}, seed {seed}")


def sample_points(curve: CurveModel, count: int) -> list[np.ndarray]:
    """Distinct rational points, deterministically ordered.

    Slices are drawn from a stream keyed by the curve seed; the collected
    set is deduplicated and sorted by coordinates before truncation, so the
    result depends only on (curve, count).
    """
    if count < 1:
        raise ValueError("count must be positive")
    p = curve.prime
    if count > p // 2:
        # Hasse-Weil caps rational points near p; far larger requests are
        # hopeless and would burn the whole slice budget
        raise InsufficientPoints(f"cannot collect {count} points over F_{p}")
    stream = Stream(curve.seed, f"sample-points-g{curve.genus}")
    found: dict[tuple, np.ndarray] = {}
    budget = POINT_BUDGET_FACTOR * count + 400
    if curve.genus == 4:
        chart = ruling_chart(curve)
        while len(found) < count and budget > 0:
            budget -= 1
            u = stream.field(p)
            for q in chart.points_on_line(u):
                found[tuple(q.tolist())] = q
    else:
        while len(found) < count and budget > 0:
            budget -= 1
            h = stream.field_vec(p, 5)
            if not h.any():
                continue
            for q in _genus5_section(curve, h, chart_tries=2):
                found[tuple(q.tolist())] = q
    if len(found) < count:
        raise InsufficientPoints(
            f"found {len(found)} of {count} requested points")
    ordered = [found[k] for k in sorted(found)]
    return ordered[:count]


# ---------------------------------------------------------------------------
# persistence


def curve_to_json(curve: CurveModel, points: list[np.ndarray]) -> dict:
    gens = []
    for d, c in curve.generator_arrays():
        gens.append(mono.form_to_pairs(c, curve.genus, d))
    return {
        "genus": curve.genus,
        "prime": curve.prime,
        "seed": curve.seed,
        "generators": gens,
        "points": [[int(v) for v in q] for q in points],
    }


def curve_from_json(data: dict) -> tuple[CurveModel, list[np.ndarray]]:
    g = int(data["genus"])
    p = int(data["prime"])
    gens = []
    for pairs in data["generators"]:
        deg = sum(pairs[0][0])
        coeffs = mono.form_from_pairs(pairs, g, deg, p)
        gens.append((deg, tuple(int(v) for v in coeffs)))
    curve = CurveModel(g, p, int(data["seed"]), tuple(gens))
    pts = [np.array(q, dtype=np.int64) for q in data["points"]]
    return curve, pts


def save_curve(path: str, curve: CurveModel, points: list[np.ndarray]) -> None:
    with open(path, "w") as fh:
        json.dump(curve_to_json(curve, points), fh, sort_keys=True)
        fh.write("\n")


def load_curve(path: str) -> tuple[CurveModel, list[np.ndarray]]:
    with open(path) as fh:
        return curve_from_json(json.load(fh))

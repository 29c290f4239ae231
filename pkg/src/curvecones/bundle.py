"""Quadric-bundle structure of the quartic over the plane of the net.

Blowing up the vertex turns the quartic into a family of quadrics in g-2
variables indexed by the plane.  The family is read off the reconstructed
form directly: restrict to the orthogonal space of the pencil over a plane
point, check divisibility by the square of the vertex form, divide.  The
discriminant locus of the family is the plane image of the curve, and the
singular point of the fiber over a smooth image point is the curve point
itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import monomials as mono
from . import net as nt
from .canring import CurveContext
from .cone import QuarticCone
from .curve import normalize_point
from .errors import (NodeFiber, NonGenericCoordinates, RankDeficientW,
                     SplittingViolation)
from .rng import Stream, derive_key


@dataclass
class FiberQuadric:
    u: np.ndarray          # plane point, normalized
    gram: np.ndarray       # (g-2) x (g-2) Gram of the residual quadric
    basis: np.ndarray      # g x (g-2); columns: vertex-complement, vertex


def fiber_quadric(ctx: CurveContext, net_obj: nt.Net, cone: QuarticCone,
                  u: np.ndarray) -> FiberQuadric:
    """Residual quadric of the quartic over a plane point.

    Every monomial of the restriction must carry the vertex-cutting
    coordinate with exponent at least two; failure falsifies the
    vertex-singularity certificate of the cone."""
    p = ctx.p
    g = ctx.g
    m = g - 2
    u = np.asarray(u, dtype=np.int64) % p
    if not u.any():
        raise RankDeficientW("plane point cannot be zero")
    coeff_kernel = alg.kernel_basis(u.reshape(1, 3), p)
    if coeff_kernel.shape[0] != 2:
        raise RankDeficientW("plane point does not cut a pencil")
    v = coeff_kernel @ net_obj.w % p
    vperp = alg.kernel_basis(v, p)
    lead = None
    for row in vperp:
        stacked = np.concatenate([net_obj.wperp, row[None, :]])
        if alg.rank(stacked, p) == g - 2:
            lead = row
            break
    if lead is None:
        raise RankDeficientW("fiber space collapsed onto the vertex")
    basis = np.concatenate([lead[None, :], net_obj.wperp]).T  # g x (g-2)
    restricted = mono.restrict(cone.coeffs, 4, g, basis, p)
    quad = np.zeros(mono.count(m, 2), dtype=np.int64)
    qidx = mono.index_map(m, 2)
    for i, e in enumerate(mono.exponents(m, 4)):
        c = int(restricted[i])
        if c == 0:
            continue
        if e[0] < 2:
            raise SplittingViolation(
                "restricted quartic is not divisible by the vertex form "
                "squared")
        target = (e[0] - 2,) + e[1:]
        quad[qidx[target]] = c
    half = alg.inv_mod(2, p)
    gram = np.zeros((m, m), dtype=np.int64)
    for idx, e in enumerate(mono.exponents(m, 2)):
        c = int(quad[idx])
        if c == 0:
            continue
        vars_ = [k for k in range(m) if e[k]]
        if len(vars_) == 1:
            gram[vars_[0], vars_[0]] = c
        else:
            i, j = vars_
            gram[i, j] = gram[j, i] = c * half % p
    return FiberQuadric(u=normalize_point(u, p), gram=gram, basis=basis)


def _panel_fiber_count(ctx: CurveContext, net_obj: nt.Net,
                       u: np.ndarray) -> int:
    """Number of panel points projecting onto the given plane point."""
    p = ctx.p
    target = normalize_point(u, p).tolist()
    projected = nt.project(net_obj, ctx.panel, p)
    count = 0
    for row in projected:
        if row.any() and alg.normalize_scalar(row, p).tolist() == target:
            count += 1
    return count


def steinerian_check(ctx: CurveContext, net_obj: nt.Net, cone: QuarticCone,
                     pt: np.ndarray) -> bool:
    """The singular point of the fiber over the image of a curve point is
    the curve point itself (smooth image points only)."""
    p = ctx.p
    u = net_obj.w @ pt % p
    gamma = nt.gamma_equation(ctx, net_obj)
    if _panel_fiber_count(ctx, net_obj, u) != 1:
        raise NodeFiber("several panel points share this fiber")
    grad = [mono.form_eval_one(mono.partial(gamma.coeffs, k, 3,
                                            gamma.degree, p), u, 3,
                               gamma.degree - 1, p) for k in range(3)]
    if not any(grad):
        raise NodeFiber("plane image is singular at this fiber")
    fq = fiber_quadric(ctx, net_obj, cone, u)
    kern = alg.kernel_basis(fq.gram, p)
    if kern.shape[0] != 1:
        return False
    ambient = fq.basis @ kern[0] % p
    if not ambient.any():
        return False
    return alg.normalize_scalar(ambient, p).tolist() \
        == normalize_point(pt, p).tolist()


def hessian_scan(ctx: CurveContext, net_obj: nt.Net, cone: QuarticCone,
                 on_count: int, off_count: int, stream: Stream) -> dict:
    """Sample the discriminant both on and off the plane image.

    Fibers over smooth image points of curve points must be singular with
    the curve point as kernel; fibers over random points off the image must
    be nonsingular.  Returns counts and the per-fiber rows for export."""
    p = ctx.p
    gamma = nt.gamma_equation(ctx, net_obj)
    rows = []
    on_checked = on_off = 0
    kernel_matches = 0
    for pt in ctx.panel:
        if on_checked >= on_count:
            break
        u = net_obj.w @ pt % p
        try:
            match = steinerian_check(ctx, net_obj, cone, pt)
        except NodeFiber:
            continue
        det_val = alg.det(fiber_quadric(ctx, net_obj, cone, u).gram, p)
        gval = mono.form_eval_one(gamma.coeffs, u, 3, gamma.degree, p)
        rows.append((normalize_point(u, p), gval, det_val, match))
        on_checked += 1
        if match:
            kernel_matches += 1
    off_checked = 0
    off_nonzero = 0
    budget = 40 * off_count
    while off_checked < off_count and budget:
        budget -= 1
        u = stream.field_vec(p, 3)
        if not u.any():
            continue
        gval = mono.form_eval_one(gamma.coeffs, u, 3, gamma.degree, p)
        if gval == 0:
            continue
        try:
            det_val = alg.det(fiber_quadric(ctx, net_obj, cone, u).gram, p)
        except (SplittingViolation, RankDeficientW):
            continue
        rows.append((normalize_point(u, p), gval, det_val, None))
        off_checked += 1
        if det_val != 0:
            off_nonzero += 1
    on_singular = sum(1 for r in rows if r[1] == 0 and r[2] == 0)
    return {
        "rows": rows,
        "on_checked": on_checked,
        "on_singular": on_singular,
        "kernel_matches": kernel_matches,
        "off_checked": off_checked,
        "off_nonsingular": off_nonzero,
    }


# ---------------------------------------------------------------------------
# node counting


def _affine_chart(coeffs: np.ndarray, degree: int, p: int) -> np.ndarray:
    """Ternary form to bivariate array in the chart where the last
    coordinate is 1."""
    out = np.zeros((degree + 1, degree + 1), dtype=np.int64)
    for i, e in enumerate(mono.exponents(3, degree)):
        c = int(coeffs[i]) % p
        if c:
            out[e[0], e[1]] = (out[e[0], e[1]] + c) % p
    return alg.p2_trim(out)


def _p2_partial_x(f: np.ndarray, p: int) -> np.ndarray:
    if f.shape[0] <= 1:
        return np.zeros((0, 0), dtype=np.int64)
    mult = np.arange(1, f.shape[0], dtype=np.int64)[:, None]
    return alg.p2_trim(f[1:, :] * mult % p)


def _p2_partial_y(f: np.ndarray, p: int) -> np.ndarray:
    if f.shape[1] <= 1:
        return np.zeros((0, 0), dtype=np.int64)
    mult = np.arange(1, f.shape[1], dtype=np.int64)[None, :]
    return alg.p2_trim(f[:, 1:] * mult % p)


def node_count(gamma: nt.PlaneCurve, p: int, seed: int = 0,
               max_retries: int = 6) -> int:
    """Distinct singular points of the plane curve over the algebraic
    closure.

    A random frame change makes singular-point abscissae distinct; the two
    resultants of the curve with its partials share exactly the singular
    abscissae.  Rational candidates are validated against all three
    equations; candidates over extensions are counted through the degree of
    the squarefree part."""
    degree = gamma.degree
    last_error: Exception | None = None
    for attempt in range(max_retries):
        stream = Stream(derive_key(seed, f"node-count|{attempt}"), "frame")
        frame = stream.field_mat(p, 3, 3)
        if alg.rank(frame, p) != 3:
            continue
        changed = mono.restrict(gamma.coeffs, degree, 3, frame, p)
        f = _affine_chart(changed, degree, p)
        if f.shape[1] < degree + 1 or f.shape[0] < degree + 1:
            continue  # need full y-degree and x-degree with constant leads
        if int(f[0, degree]) == 0 or int(f[degree, 0]) == 0:
            continue
        fx = _p2_partial_x(f, p)
        fy = _p2_partial_y(f, p)
        r1 = alg.resultant_bivariate(f, fx, p)
        r2 = alg.resultant_bivariate(f, fy, p)
        if alg.poly_deg(r1) < 0 or alg.poly_deg(r2) < 0:
            continue
        h = alg.poly_gcd(r1, r2, p)
        if alg.poly_deg(h) <= 0:
            return 0
        h_free = alg.squarefree_part(h, p)
        rational = alg.distinct_roots(h_free, p)
        count = alg.poly_deg(h_free) - len(rational)
        try:
            for a in rational:
                fy_a = alg.p2_eval_x(f, a, p)
                fxy_a = alg.p2_eval_x(fx, a, p)
                fyy_a = alg.p2_eval_x(fy, a, p)
                if not (len(fy_a) and len(fxy_a) and len(fyy_a)):
                    raise NonGenericCoordinates("partials collapse at "
                                                "a candidate abscissa")
                common = alg.poly_gcd(alg.poly_gcd(fy_a, fxy_a, p), fyy_a, p)
                if alg.poly_deg(common) < 1:
                    continue  # fake candidate from unrelated branch points
                k = alg.poly_deg(alg.squarefree_part(common, p))
                if k > 1:
                    raise NonGenericCoordinates(
                        "two singular points share an abscissa")
                count += 1
        except NonGenericCoordinates as exc:
            last_error = exc
            continue
        return count
    raise last_error or NonGenericCoordinates(
        "no usable frame for node counting")


def scan_rows_to_csv(rows) -> str:
    lines = ["u0,u1,u2,gamma_u,det_gram,kernel_match"]
    for u, gval, dval, match in rows:
        flag = "" if match is None else str(int(match))
        lines.append(f"{int(u[0])},{int(u[1])},{int(u[2])},"
                     f"{int(gval)},{int(dval)},{flag}")
    return "\n".join(lines) + "\n"

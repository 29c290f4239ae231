"""Reconstruction of the quartic cone of a net as an explicit form, its
polar cubics, and the geometric verifications attached to them.

The quartic attached to a generic net is pinned down inside the degree-4
ideal piece by two families of exact linear conditions: all partials vanish
on the vertex, and the restriction to the orthogonal space of each pencil
inside the net splits as (vertex linear form)^2 times the quadric whose
Gram is the inverse of the cup-product Gram on that space.  The membership
oracle of the net module never enters the reconstruction; it serves as an
independent verification channel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from . import curve as cv
from . import monomials as mono
from . import net as nt
from . import pencil as pc
from .canring import CurveContext
from .errors import (CorankJump, CurveConesError, DegenerateInput,
                     InconsistentReconstruction, InadmissiblePencil,
                     NonGenericD, SigmaPoint, SingularPoint,
                     UnderdeterminedReconstruction, VerificationFailed)
from .rng import Stream, derive_key


@dataclass
class SplitFiber:
    v: np.ndarray          # 2 x g pencil basis
    vperp: np.ndarray      # (g-2) x g basis of the annihilator
    w: np.ndarray          # lift vector used for the cup Gram
    ell: np.ndarray        # linear form on vperp coordinates cutting the vertex
    gram: np.ndarray       # (g-2) x (g-2) residual quadric Gram
    pencil: pc.PencilData


@dataclass
class QuarticCone:
    net: nt.Net
    coeffs: np.ndarray     # degree-4 coefficient vector, first nonzero = 1
    certificate: dict = field(default_factory=dict)


@dataclass
class CubicPolar:
    x: np.ndarray
    coeffs: np.ndarray
    certificate: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# pencil fibers


def split_fiber(ctx: CurveContext, net_obj: nt.Net, v: np.ndarray
                ) -> SplitFiber:
    """Residual-quadric data of the quartic on the orthogonal space of a
    pencil inside the net.

    The Gram entries are G[i][j] = <v_i, y_j> with gram y_j = v_j, i.e. the
    inverse Gram of the cup product on the annihilator of the pencil;
    symmetry of the cup Gram makes G symmetric exactly.
    """
    p = ctx.p
    pen = pc.build_pencil(ctx, v)
    if alg.rank(np.concatenate([net_obj.w, pen.v]), p) != 3:
        raise InadmissiblePencil("pencil does not sit inside the net")
    w = None
    for row in net_obj.w:
        if alg.rank(np.concatenate([pen.v, row[None, :]]), p) == 3:
            w = row
            break
    cg = pc.cup_gram(ctx, pen, w)
    if pc.corank(cg.gram, p) != 2:
        raise CorankJump("pencil fiber meets the degeneracy divisor")
    vperp = alg.kernel_basis(pen.v, p)
    ys = []
    for row in vperp:
        y, _ = alg.solve_consistent(cg.gram, row, p)
        ys.append(y)
    m = vperp.shape[0]
    gram = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            gram[i, j] = int(vperp[i] @ ys[j] % p)
    if not (gram == gram.T).all():
        raise VerificationFailed("residual Gram failed exact symmetry")
    coords = []
    for x in net_obj.wperp:
        c, _ = alg.solve_consistent(vperp.T, x, p)
        coords.append(c)
    ell = alg.kernel_basis(np.stack(coords), p)
    if ell.shape[0] != 1:
        raise CorankJump("vertex does not cut a hyperplane of the fiber")
    return SplitFiber(v=pen.v, vperp=vperp, w=w,
                      ell=alg.normalize_scalar(ell[0], p), gram=gram,
                      pencil=pen)


def fiber_quadric_form(fiber: SplitFiber, p: int) -> np.ndarray:
    """Degree-2 coefficient vector of c -> c^T G c on fiber coordinates."""
    m = fiber.gram.shape[0]
    out = np.zeros(mono.count(m, 2), dtype=np.int64)
    idx = mono.index_map(m, 2)
    for i in range(m):
        for j in range(i, m):
            e = [0] * m
            e[i] += 1
            e[j] += 1
            val = fiber.gram[i, j] if i == j else 2 * fiber.gram[i, j]
            out[idx[tuple(e)]] = val % p
    return out


def split_product_form(fiber: SplitFiber, p: int) -> np.ndarray:
    """ell^2 times the residual quadric, a quartic on fiber coordinates."""
    m = fiber.gram.shape[0]
    ell2 = mono.mul_forms(fiber.ell, 1, fiber.ell, 1, m, p)
    return mono.mul_forms(ell2, 2, fiber_quadric_form(fiber, p), 2, m, p)


def form_matches_split(ctx: CurveContext, coeffs: np.ndarray,
                       fiber: SplitFiber) -> bool:
    """Exact proportionality of the restricted quartic with the splitting."""
    p = ctx.p
    restricted = mono.restrict(coeffs, 4, ctx.g, fiber.vperp.T, p)
    lhs = alg.normalize_scalar(restricted, p)
    rhs = alg.normalize_scalar(split_product_form(fiber, p), p)
    return lhs.tolist() == rhs.tolist()


# ---------------------------------------------------------------------------
# vertex-singularity conditions


def vertex_condition_matrix(ctx: CurveContext, net_obj: nt.Net,
                            forms: np.ndarray, deg: int) -> np.ndarray:
    """Linear conditions on combinations of the given forms expressing that
    every partial derivative vanishes identically on the vertex.

    For a point vertex each partial contributes one evaluation; for a line
    vertex each partial restricted to the line must vanish as a binary form,
    contributing deg coefficients."""
    p = ctx.p
    g = ctx.g
    rows = []
    for var in range(g):
        partials = np.stack([mono.partial(f, var, g, deg, p) for f in forms])
        if net_obj.wperp.shape[0] == 1:
            x = net_obj.wperp[0]
            rows.append(np.array(
                [mono.form_eval_one(pf, x, g, deg - 1, p) for pf in partials],
                dtype=np.int64))
        else:
            restricted = [mono.restrict(pf, deg - 1, g, net_obj.wperp.T, p)
                          for pf in partials]
            block = np.stack(restricted)  # forms x binary-form coefficients
            for col in range(block.shape[1]):
                rows.append(block[:, col])
    return np.stack(rows) % p


def constrained_space(ctx: CurveContext, net_obj: nt.Net, deg: int
                      ) -> np.ndarray:
    """Basis of ideal forms of the given degree singular along the vertex."""
    basis = ctx.ideal(deg).basis
    conditions = vertex_condition_matrix(ctx, net_obj, basis, deg)
    combos = alg.kernel_basis(conditions, ctx.p)
    if combos.shape[0] == 0:
        return np.zeros((0, basis.shape[1]), dtype=np.int64)
    return combos @ basis % ctx.p


# ---------------------------------------------------------------------------
# reconstruction


def _pencil_through(net_obj: nt.Net, u: np.ndarray, p: int) -> np.ndarray:
    """Pencil inside the net cut by a functional u on its basis."""
    coeff_kernel = alg.kernel_basis(np.asarray(u, dtype=np.int64)
                                    .reshape(1, 3), p)
    return coeff_kernel @ net_obj.w % p


def _fresh_fibers(ctx: CurveContext, net_obj: nt.Net, stream: Stream,
                  count: int, budget: int = 120) -> list[SplitFiber]:
    fibers = []
    while len(fibers) < count and budget:
        budget -= 1
        u = stream.field_vec(ctx.p, 3)
        if not u.any():
            continue
        try:
            fibers.append(split_fiber(ctx, net_obj,
                                      _pencil_through(net_obj, u, ctx.p)))
        except DegenerateInput:
            continue
    if len(fibers) < count:
        raise CorankJump("could not collect enough admissible pencils")
    return fibers


def _fiber_equations(ctx: CurveContext, fiber: SplitFiber, s_basis: np.ndarray,
                     stream: Stream) -> tuple[np.ndarray, np.ndarray]:
    """Per-fiber data for the equations F(b) - c_k ell(b)^2 q(b) = 0.

    Returns the evaluations of the constrained-space basis at the sample
    points and the split-product values those equations subtract."""
    p = ctx.p
    g = ctx.g
    m = g - 2
    npts = 2 * (g - 2) + 3
    cs = np.stack([stream.field_vec(p, m) for _ in range(npts)])
    pts = cs @ fiber.vperp % p
    e4 = mono.eval_matrix(pts, g, 4, p)
    f_block = e4 @ s_basis.T % p
    rhs = mono.form_eval(split_product_form(fiber, p), cs, m, 4, p)
    return f_block, rhs


def reconstruct_quartic(ctx: CurveContext, net_obj: nt.Net, seed: int = 0,
                        k_start: int = 6, k_max: int = 20,
                        oracle_points: int = 50) -> QuarticCone:
    """Solve for the quartic cone of a net away from the degeneracy divisor.

    Stacks the vertex-singularity constraints with splitting equations over
    adaptively many pencils, demands a one-dimensional solution space, and
    verifies the result against fresh points, the membership oracle, and a
    holdout pencil."""
    if net_obj.in_d:
        raise DegenerateInput("net lies on the degeneracy divisor")
    p = ctx.p
    tag = "reconstruct|%d|%s" % (seed, ",".join(
        str(int(v)) for v in net_obj.w.reshape(-1)))
    stream = Stream(derive_key(ctx.curve.seed, tag), "pencils")
    s_basis = constrained_space(ctx, net_obj, 4)
    dim_s = s_basis.shape[0]
    if dim_s == 0:
        raise InconsistentReconstruction("constrained space is empty")
    fibers = _fresh_fibers(ctx, net_obj, stream.spawn("draw"), k_start)
    blocks: list[tuple[np.ndarray, np.ndarray]] = []
    solution = None
    while True:
        k = len(fibers)
        while len(blocks) < k:
            idx = len(blocks)
            blocks.append(_fiber_equations(ctx, fibers[idx], s_basis,
                                           stream.spawn(f"pts{idx}")))
        total = dim_s + k
        rows = []
        for idx, (f_block, rhs) in enumerate(blocks):
            block = np.zeros((f_block.shape[0], total), dtype=np.int64)
            block[:, :dim_s] = f_block
            block[:, dim_s + idx] = (-rhs) % p
            rows.append(block)
        system = np.concatenate(rows, axis=0)
        kernel = alg.kernel_basis(system, p)
        if kernel.shape[0] == 0:
            raise InconsistentReconstruction(
                "splitting equations admit no common quartic")
        if kernel.shape[0] == 1:
            solution = kernel[0]
            break
        if k >= k_max:
            raise UnderdeterminedReconstruction(
                f"solution space still {kernel.shape[0]}-dimensional "
                f"after {k} pencils")
        fibers.extend(_fresh_fibers(ctx, net_obj, stream.spawn(f"more{k}"), 2))
    beta = solution[:dim_s]
    coeffs = alg.normalize_scalar(beta @ s_basis % p, p)
    if not coeffs.any():
        raise InconsistentReconstruction("solution collapsed to zero")
    cone = QuarticCone(net=net_obj, coeffs=coeffs)
    cone.certificate = verify_cone(ctx, cone, stream.spawn("verify"),
                                   oracle_points=oracle_points)
    cone.certificate["dim_constrained_space"] = int(dim_s)
    cone.certificate["pencils_used"] = len(fibers)
    cone.certificate["solution_dim"] = 1
    return cone


def double_quadric_quartic(ctx: CurveContext, net_obj: nt.Net) -> QuarticCone:
    """Quartic of a degenerate net: the square of its certificate quadric."""
    if not net_obj.in_d:
        raise NonGenericD("net is not on the degeneracy divisor")
    if net_obj.d_certificate is None:
        raise NonGenericD("restriction kernel is not one-dimensional")
    p = ctx.p
    q = net_obj.d_certificate
    coeffs = alg.normalize_scalar(mono.mul_forms(q, 2, q, 2, ctx.g, p), p)
    cone = QuarticCone(net=net_obj, coeffs=coeffs)
    cert = {
        "points_vanished": int(ctx.panel.shape[0] + ctx.holdout.shape[0]),
        "contains_curve": ctx.vanishes_on_curve(coeffs, 4),
        "vertex_singular": bool(not vertex_condition_matrix(
            ctx, net_obj, coeffs[None, :], 4).any()),
        "double_quadric": True,
    }
    if not cert["contains_curve"] or not cert["vertex_singular"]:
        raise VerificationFailed("double-quadric certificate failed")
    cone.certificate = cert
    return cone


# ---------------------------------------------------------------------------
# verification helpers


def points_on_form(ctx: CurveContext, coeffs: np.ndarray, deg: int,
                   stream: Stream, count: int, budget: int = 400
                   ) -> list[np.ndarray]:
    """Rational points of the hypersurface, harvested on random lines."""
    p = ctx.p
    g = ctx.g
    pts = []
    while len(pts) < count and budget:
        budget -= 1
        a = stream.field_vec(p, g)
        b = stream.field_vec(p, g)
        binary = mono.restrict_to_line(coeffs, deg, g, a, b, p)
        f = alg.poly_trim(binary)
        if alg.poly_deg(f) < 1:
            continue
        for t in alg.distinct_roots(f, p):
            cand = (a + t * b) % p
            if cand.any():
                pts.append(cv.normalize_point(cand, p))
    return pts[:count]


def oracle_agreement(ctx: CurveContext, net_obj: nt.Net, coeffs: np.ndarray,
                     stream: Stream, count: int,
                     x: np.ndarray | None = None) -> tuple[int, int]:
    """Compare the membership oracle with explicit evaluation.

    Half the probes are harvested from the zero set of the form (oracle must
    say yes), half are random (almost surely off the form, oracle must agree
    with the evaluation).  Returns (checked, disagreements)."""
    p = ctx.p
    deg = 4 if x is None else 3
    checked = 0
    disagreements = 0
    zero_half = count // 2
    for b in points_on_form(ctx, coeffs, deg, stream.spawn("zeros"),
                            3 * zero_half):
        if checked >= zero_half:
            break
        try:
            val = nt.fw_oracle(ctx, net_obj, b) if x is None \
                else nt.polar_oracle(ctx, net_obj, x, b)
        except DegenerateInput:
            continue
        checked += 1
        if not val:
            disagreements += 1
    budget = 40 * count
    while checked < count and budget:
        budget -= 1
        b = stream.field_vec(p, ctx.g)
        if not b.any():
            continue
        expected = mono.form_eval_one(coeffs, b, ctx.g, deg, p) == 0
        try:
            val = nt.fw_oracle(ctx, net_obj, b) if x is None \
                else nt.polar_oracle(ctx, net_obj, x, b)
        except DegenerateInput:
            continue
        checked += 1
        if val != expected:
            disagreements += 1
    return checked, disagreements


def verify_cone(ctx: CurveContext, cone: QuarticCone, stream: Stream,
                oracle_points: int = 50) -> dict:
    """Certificate of a reconstructed quartic: containment, vertex
    singularity, oracle agreement, and a fresh holdout pencil splitting."""
    p = ctx.p
    net_obj = cone.net
    cert: dict = {}
    cert["points_vanished"] = int(ctx.panel.shape[0] + ctx.holdout.shape[0])
    cert["contains_curve"] = ctx.vanishes_on_curve(cone.coeffs, 4)
    cert["vertex_singular"] = bool(not vertex_condition_matrix(
        ctx, net_obj, cone.coeffs[None, :], 4).any())
    checked, bad = oracle_agreement(ctx, net_obj, cone.coeffs,
                                    stream.spawn("oracle"), oracle_points)
    cert["oracle_points"] = int(checked)
    cert["oracle_disagreements"] = int(bad)
    holdout = _fresh_fibers(ctx, net_obj, stream.spawn("holdout"), 1)[0]
    cert["holdout_pencil"] = form_matches_split(ctx, cone.coeffs, holdout)
    if not (cert["contains_curve"] and cert["vertex_singular"]
            and cert["holdout_pencil"] and bad == 0
            and checked >= oracle_points):
        raise VerificationFailed(f"cone certificate failed: {cert}")
    return cert


# ---------------------------------------------------------------------------
# polars


def polar_cubic(ctx: CurveContext, cone: QuarticCone, x: np.ndarray,
                stream: Stream | None = None,
                oracle_points: int = 0) -> CubicPolar:
    """Polar cubic sum x_i dF/dz_i, with membership and vertex certificates."""
    p = ctx.p
    g = ctx.g
    x = np.asarray(x, dtype=np.int64) % p
    if not x.any():
        raise ValueError("x must be a nonzero vertex vector")
    coeffs = np.zeros(mono.count(g, 3), dtype=np.int64)
    for var in range(g):
        if int(x[var]):
            coeffs = (coeffs + int(x[var])
                      * mono.partial(cone.coeffs, var, g, 4, p)) % p
    polar = CubicPolar(x=x, coeffs=coeffs)
    cert: dict = {
        "in_cubic_ideal": ctx.in_ideal(coeffs, 3),
        "vertex_singular": bool(not vertex_condition_matrix(
            ctx, cone.net, coeffs[None, :], 3).any()),
    }
    if stream is not None and oracle_points:
        checked, bad = oracle_agreement(ctx, cone.net, coeffs,
                                        stream, oracle_points, x=x)
        cert["oracle_points"] = int(checked)
        cert["oracle_disagreements"] = int(bad)
    polar.certificate = cert
    return polar


def lw_space(ctx: CurveContext, net_obj: nt.Net,
             cone: QuarticCone | None = None) -> tuple[np.ndarray, int]:
    """Cubic ideal forms singular along the vertex, and the rank of the
    polar map from the vertex span into that space."""
    p = ctx.p
    basis = constrained_space(ctx, net_obj, 3)
    if cone is None:
        cone = reconstruct_quartic(ctx, net_obj, oracle_points=4)
    polars = [polar_cubic(ctx, cone, x).coeffs for x in net_obj.wperp]
    polar_rank = alg.rank(np.stack(polars), p)
    for row in polars:
        stacked = np.concatenate([basis, row[None, :]])
        if alg.rank(stacked, p) != basis.shape[0]:
            raise VerificationFailed("polar cubic escapes the singular space")
    return basis, polar_rank


# ---------------------------------------------------------------------------
# secant and tangent-space checks


def secant_criterion(ctx: CurveContext, net_obj: nt.Net, cone: QuarticCone,
                     pt_p: np.ndarray, pt_q: np.ndarray
                     ) -> tuple[bool, bool]:
    """(contained, predicted) for the secant line through two curve points.

    contained: the quartic restricts to zero on the line.  predicted: the
    line meets the vertex, or the net holds a section vanishing doubly at
    both points."""
    p = ctx.p
    g = ctx.g
    binary = mono.restrict_to_line(cone.coeffs, 4, g, pt_p, pt_q, p)
    contained = not binary.any()
    meets_vertex = alg.rank(np.concatenate(
        [pt_p[None, :], pt_q[None, :], net_obj.wperp]), p) <= g - 2
    tp = ctx.tangent(pt_p)
    tq = ctx.tangent(pt_q)
    conds = np.stack([tp.point, tp.direction, tq.point, tq.direction])
    system = conds @ net_obj.w.T % p
    double_section = alg.rank(system, p) <= 2
    return contained, bool(meets_vertex or double_section)


def tangent_space_check(ctx: CurveContext, net_obj: nt.Net,
                        cone: QuarticCone, pt: np.ndarray) -> bool:
    """Tangent hyperplane of the quartic at a curve point equals the span of
    the curve tangent line and the vertex."""
    p = ctx.p
    g = ctx.g
    td = ctx.tangent(pt)
    span = np.concatenate([td.point[None, :], td.direction[None, :],
                           net_obj.wperp])
    if alg.rank(span, p) != g - 1:
        raise SigmaPoint("curve tangent line meets the vertex")
    grad = np.array([mono.form_eval_one(
        mono.partial(cone.coeffs, var, g, 4, p), pt, g, 3, p)
        for var in range(g)], dtype=np.int64)
    if not grad.any():
        return False
    return not (span @ grad % p).any()


# ---------------------------------------------------------------------------
# engineered configurations


def secant_through_vertex(ctx: CurveContext, stream: Stream,
                          tries: int = 120) -> tuple[np.ndarray, np.ndarray,
                                                     nt.Net]:
    """Two panel points and a generic net whose vertex meets their secant."""
    p = ctx.p
    n = ctx.panel.shape[0]
    for _ in range(tries):
        i = stream.integer(0, n)
        j = stream.integer(0, n)
        if i == j:
            continue
        pt_p, pt_q = ctx.panel[i], ctx.panel[j]
        x1 = (stream.nonzero(p) * pt_p + stream.nonzero(p) * pt_q) % p
        rows = [x1]
        for _ in range(ctx.g - 4):
            rows.append(stream.field_vec(p, ctx.g))
        vertex = np.stack(rows)
        if alg.rank(vertex, p) != ctx.g - 3:
            continue
        try:
            net_obj = nt.net_from_vertex(ctx, vertex)
        except CurveConesError:
            continue
        if net_obj.in_b or net_obj.in_d:
            continue
        return pt_p, pt_q, net_obj
    raise DegenerateInput("no vertex-secant configuration found")


def double_vanishing_section(ctx: CurveContext, pt_p: np.ndarray,
                             pt_q: np.ndarray) -> np.ndarray | None:
    """Section vanishing doubly at both points, when one exists."""
    p = ctx.p
    tp = ctx.tangent(pt_p)
    tq = ctx.tangent(pt_q)
    conds = np.stack([tp.point, tp.direction, tq.point, tq.direction])
    kernel = alg.kernel_basis(conds, p)
    if kernel.shape[0] == 0:
        return None
    return alg.normalize_scalar(kernel[0], p)


def bitangent_pair(ctx: CurveContext, stream: Stream,
                   point_tries: int = 24) -> tuple[np.ndarray, np.ndarray,
                                                   np.ndarray]:
    """A pair of genus-4 curve points with a section double-vanishing at
    both, located by sweeping the pencil of planes through one tangent line
    and interpolating the discriminant of the residual section polynomial."""
    if ctx.g != 4:
        raise ValueError("the sweep construction is specific to genus 4")
    p = ctx.p
    chart = cv.ruling_chart(ctx.curve)
    n = ctx.panel.shape[0]
    for _ in range(point_tries):
        pt = ctx.panel[stream.integer(0, n)]
        if chart.param_of(pt) is None:
            continue
        td = ctx.tangent(pt)
        forms = alg.kernel_basis(np.stack([td.point, td.direction]), p)
        s1, s2 = forms[0], forms[1]

        def sweep(lam: int) -> np.ndarray:
            return chart.section_poly((s1 + lam * s2) % p)

        common = alg.poly_gcd(sweep(101), alg.poly_gcd(
            sweep(202), sweep(303), p), p)
        lam_nodes: list[int] = []
        disc_vals: list[int] = []
        generic_deg = None
        lam = 1
        while len(lam_nodes) < 80 and lam < 700:
            lam += 1
            f = sweep(lam)
            quot, rem = alg.poly_divmod(f, common, p)
            if len(rem):
                continue
            d = alg.poly_deg(quot)
            if generic_deg is None:
                generic_deg = d
            if d != generic_deg or d < 2:
                continue
            dq = alg.poly_deriv(quot, p)
            lam_nodes.append(lam)
            disc_vals.append(alg.resultant(quot, dq, p))
        if len(lam_nodes) < 80:
            continue
        disc = alg.lagrange_interpolate(lam_nodes, disc_vals, p)
        if alg.poly_deg(disc) < 1:
            continue
        for lam_star in alg.distinct_roots(disc, p):
            section = (s1 + lam_star * s2) % p
            quot, rem = alg.poly_divmod(sweep(lam_star), common, p)
            if len(rem):
                continue
            repeated = alg.poly_gcd(quot, alg.poly_deriv(quot, p), p)
            if alg.poly_deg(repeated) < 1:
                continue
            for u_q in alg.distinct_roots(repeated, p):
                a, b = chart.line_at(u_q)
                hb = int(section @ b % p)
                if hb == 0:
                    continue
                t = (-int(section @ a % p)) * alg.inv_mod(hb, p) % p
                cand = (a + t * b) % p
                if not cand.any():
                    continue
                cand = cv.normalize_point(cand, p)
                if cand.tolist() == td.point.tolist():
                    continue
                if not cv.on_curve(ctx.curve, cand):
                    continue
                try:
                    tq = ctx.tangent(cand)
                except SingularPoint:
                    continue
                if int(section @ cand % p) == 0 \
                        and int(section @ tq.direction % p) == 0:
                    return td.point, cand, section
    raise DegenerateInput("no bitangent pair found within the sweep budget")


def contained_double_secant(ctx: CurveContext, stream: Stream,
                            count: int = 1, pair_tries: int = 16
                            ) -> list[tuple[np.ndarray, np.ndarray, nt.Net,
                                            QuarticCone]]:
    """Engineer secants carried by a section vanishing doubly at both ends
    AND genuinely contained in the quartic.

    Double vanishing alone forces the restricted quartic into the square of
    the product of the two root forms but does not kill its remaining
    coefficient (the square-of-quadric picture on the degeneracy divisor
    shows that coefficient survives specialization, so it is nonzero for
    generic nets through the section).  The net family through the section
    is swept along one parameter, the oracle value at a fixed line point is
    interpolated as a rational function of the parameter, and the numerator
    roots are verified exactly."""
    p = ctx.p
    g = ctx.g
    results = []
    for trial in range(pair_tries):
        if len(results) >= count:
            break
        sub = stream.spawn(f"pair{trial}")
        if g == 4:
            try:
                pt_p, pt_q, section = bitangent_pair(ctx, sub.spawn("bit"))
            except DegenerateInput:
                continue
        else:
            n = ctx.panel.shape[0]
            i = sub.integer(0, n)
            j = sub.integer(0, n)
            if i == j:
                continue
            pt_p, pt_q = ctx.panel[i], ctx.panel[j]
            section = double_vanishing_section(ctx, pt_p, pt_q)
            if section is None:
                continue
        b0 = (pt_p + sub.nonzero(p) * pt_q) % p
        for fam in range(4):
            if len(results) >= count:
                break
            famsub = sub.spawn(f"family{fam}")
            r1 = famsub.field_vec(p, g)
            r2 = famsub.field_vec(p, g)
            r3 = famsub.field_vec(p, g)
            ts: list[int] = []
            vs: list[int] = []
            t = 0
            while len(ts) < 100 and t < 500:
                t += 1
                w = np.stack([section, r1, (r2 + t * r3) % p])
                if alg.rank(w, p) != 3:
                    continue
                try:
                    net_t = nt.build_net(ctx, w, with_gamma=False)
                    if net_t.in_b or net_t.in_d:
                        continue
                    vs.append(nt.oracle_value(ctx, net_t, b0,
                                              check_gamma=False))
                    ts.append(t)
                except (DegenerateInput, CurveConesError):
                    continue
            if len(ts) < 100:
                continue
            fit = alg.rational_interpolate(ts[:94], vs[:94], p, 45, 45)
            if fit is None:
                continue
            num, den = fit
            if not all(alg.poly_eval(num, ts[94 + k], p)
                       == vs[94 + k] * alg.poly_eval(den, ts[94 + k], p) % p
                       for k in range(6)):
                continue
            for root in alg.distinct_roots(num, p):
                if len(results) >= count:
                    break
                w = np.stack([section, r1, (r2 + root * r3) % p])
                if alg.rank(w, p) != 3:
                    continue
                try:
                    net_r = nt.build_net(ctx, w)
                except CurveConesError:
                    continue
                if net_r.in_b or net_r.in_d:
                    continue
                try:
                    cone_r = reconstruct_quartic(ctx, net_r, oracle_points=4)
                except CurveConesError:
                    continue
                if secant_criterion(ctx, net_r, cone_r, pt_p, pt_q) \
                        == (True, True):
                    results.append((pt_p, pt_q, net_r, cone_r))
    if len(results) < count:
        raise DegenerateInput(
            f"found {len(results)} of {count} contained double secants")
    return results


def net_containing_section(ctx: CurveContext, section: np.ndarray,
                           stream: Stream, tries: int = 80) -> nt.Net:
    """Generic net containing the given section, off the degeneracy locus."""
    p = ctx.p
    for _ in range(tries):
        rows = np.stack([section] + [stream.field_vec(p, ctx.g)
                                     for _ in range(2)])
        if alg.rank(rows, p) != 3:
            continue
        net_obj = nt.build_net(ctx, rows)
        if net_obj.in_b or net_obj.in_d:
            continue
        return net_obj
    raise DegenerateInput("no generic net through the section found")


def degenerate_net(ctx: CurveContext, stream: Stream,
                   quadric: np.ndarray | None = None,
                   tries: int = 200) -> nt.Net:
    """Engineer a net on the degeneracy divisor: its vertex lies inside a
    quadric of the ideal (the whole vertex line for genus 5)."""
    p = ctx.p
    g = ctx.g
    i2 = ctx.ideal(2)
    for _ in range(tries):
        if quadric is None:
            combo = stream.field_vec(p, i2.dim)
            if not combo.any():
                continue
            q = combo @ i2.basis % p
        else:
            q = np.asarray(quadric, dtype=np.int64) % p
        gram = cv.quadric_gram(q, g, p)

        def qval(x):
            return int(x @ gram @ x % p)

        def bil(x, y):
            return int(x @ gram @ y % p) * 2 % p

        q1 = _point_on_quadric(gram, stream, p)
        if q1 is None:
            continue
        if g == 4:
            vertex = q1[None, :]
        else:
            hb = alg.kernel_basis((2 * q1 @ gram % p).reshape(1, g), p)
            c1 = hb.T @ stream.field_vec(p, hb.shape[0]) % p
            c2 = hb.T @ stream.field_vec(p, hb.shape[0]) % p
            f = alg.poly_trim(np.array(
                [qval(c1), bil(c1, c2), qval(c2)], dtype=np.int64))
            roots = alg.distinct_roots(f, p) if alg.poly_deg(f) >= 1 else []
            if not roots:
                continue
            q2 = (c1 + roots[0] * c2) % p
            if not q2.any() or alg.rank(np.stack([q1, q2]), p) != 2:
                continue
            vertex = np.stack([q1, q2])
        try:
            net_obj = nt.net_from_vertex(ctx, vertex)
        except CurveConesError:
            continue
        if net_obj.in_b or not net_obj.in_d:
            continue
        if net_obj.d_certificate is None:
            continue
        return net_obj
    raise NonGenericD("could not engineer a degenerate net")


def _point_on_quadric(gram: np.ndarray, stream: Stream, p: int,
                      tries: int = 60) -> np.ndarray | None:
    g = gram.shape[0]
    for _ in range(tries):
        a = stream.field_vec(p, g)
        b = stream.field_vec(p, g)
        c0 = int(a @ gram @ a % p)
        c1 = int(a @ gram @ b % p) * 2 % p
        c2 = int(b @ gram @ b % p)
        f = alg.poly_trim(np.array([c0, c1, c2], dtype=np.int64))
        if alg.poly_deg(f) < 1:
            continue
        roots = alg.distinct_roots(f, p)
        if roots:
            cand = (a + roots[0] * b) % p
            if cand.any():
                return cv.normalize_point(cand, p)
    return None


# ---------------------------------------------------------------------------
# serialization


def cone_to_json(cone: QuarticCone, g: int) -> dict:
    return {
        "W": [[int(v) for v in row] for row in cone.net.w],
        "coeffs": mono.form_to_pairs(cone.coeffs, g, 4),
        "certificate": cone.certificate,
    }


def polar_to_json(polar: CubicPolar, g: int) -> dict:
    return {
        "x": [int(v) for v in polar.x],
        "coeffs": mono.form_to_pairs(polar.coeffs, g, 3),
        "certificate": polar.certificate,
    }

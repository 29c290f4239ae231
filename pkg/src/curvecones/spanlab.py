"""Linear systems swept out by the quartic cones and their polar cubics.

Accumulators stack normalized coefficient vectors from many reconstructions
(plus the squares of ideal quadrics reachable through degenerate nets,
which the quartic system provably contains) and watch the rank saturate.
The base-locus probe then checks, set-theoretically over the sample panels,
that the accumulated system cuts out exactly the curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from . import cone as cn
from . import curve as cv
from . import monomials as mono
from . import net as nt
from .canring import CurveContext
from .errors import CurveConesError, DegenerateInput
from .rng import Stream, derive_key


@dataclass
class SpanAccumulator:
    degree: int
    rows: np.ndarray
    rank: int = 0
    provenance: list = field(default_factory=list)
    trajectory: list = field(default_factory=list)
    sources: list = field(default_factory=list)   # nets behind the rows

    def add(self, row: np.ndarray, tag: str, p: int,
            source: nt.Net | None = None) -> None:
        row = alg.normalize_scalar(row, p)[None, :]
        self.rows = row if self.rows.size == 0 \
            else np.concatenate([self.rows, row])
        new_rank = alg.rank(self.rows, p)
        if new_rank < self.rank:
            raise CurveConesError("span rank decreased; corrupted row")
        self.rank = new_rank
        self.provenance.append(tag)
        if source is not None:
            self.sources.append(source)


def collect_cones(ctx: CurveContext, count: int, seed: int,
                  oracle_points: int = 4) -> list[cn.QuarticCone]:
    """Reconstructed quartics for `count` random generic nets; failed
    reconstructions are logged in place and the net resampled."""
    stream = Stream(derive_key(ctx.curve.seed, f"span-cones|{seed}"), "w")
    cones = []
    failures = 0
    while len(cones) < count and failures < 4 * count + 20:
        net_obj = nt.random_net(ctx, stream.spawn(f"net{len(cones)}-"
                                                  f"{failures}"))
        try:
            cones.append(cn.reconstruct_quartic(ctx, net_obj,
                                                oracle_points=oracle_points))
        except CurveConesError:
            failures += 1
    if len(cones) < count:
        raise DegenerateInput(f"only {len(cones)} reconstructions succeeded")
    return cones


def _square_rows(ctx: CurveContext, seed: int) -> list[tuple[np.ndarray,
                                                             nt.Net]]:
    """Squares of ideal quadrics realized through degenerate nets; enough
    independent combinations to span all squares."""
    i2 = ctx.ideal(2)
    wanted = 1 if ctx.g == 4 else 6
    stream = Stream(derive_key(ctx.curve.seed, f"span-squares|{seed}"), "q")
    rows = []
    tries = 0
    while len(rows) < wanted and tries < 8 * wanted + 8:
        tries += 1
        combo = stream.field_vec(ctx.p, i2.dim)
        if not combo.any():
            continue
        quadric = combo @ i2.basis % ctx.p
        try:
            net_obj = cn.degenerate_net(ctx, stream.spawn(f"dn{tries}"),
                                        quadric=quadric)
            cone_obj = cn.double_quadric_quartic(ctx, net_obj)
        except CurveConesError:
            continue
        rows.append((cone_obj.coeffs, net_obj))
    if len(rows) < wanted:
        raise DegenerateInput("could not realize enough quadric squares")
    return rows


def accumulate_f4(ctx: CurveContext, sample_count: int, seed: int,
                  cones: list[cn.QuarticCone] | None = None
                  ) -> SpanAccumulator:
    """Span of quartic cones: reconstructions for random generic nets plus
    double-quadric rows from engineered degenerate nets.

    Saturation policy: stop after three consecutive rank-stable batches of
    five reconstructions, or at sample_count."""
    p = ctx.p
    acc = SpanAccumulator(degree=4, rows=np.zeros((0, mono.count(ctx.g, 4)),
                                                  dtype=np.int64))
    for coeffs, net_obj in _square_rows(ctx, seed):
        acc.add(coeffs, "double-quadric", p, source=net_obj)
    acc.trajectory.append(acc.rank)
    if cones is None:
        cones = collect_cones(ctx, sample_count, seed)
    stable = 0
    used = 0
    while used < len(cones) and stable < 3:
        before = acc.rank
        for _ in range(5):
            if used >= len(cones):
                break
            cone_obj = cones[used]
            acc.add(cone_obj.coeffs, f"reconstruction-{used}", p,
                    source=cone_obj.net)
            used += 1
        acc.trajectory.append(acc.rank)
        stable = stable + 1 if acc.rank == before else 0
    return acc


def accumulate_f3(ctx: CurveContext, sample_count: int, seed: int,
                  cones: list[cn.QuarticCone] | None = None
                  ) -> SpanAccumulator:
    """Span of the polar cubics, one per vertex basis vector per net."""
    p = ctx.p
    acc = SpanAccumulator(degree=3, rows=np.zeros((0, mono.count(ctx.g, 3)),
                                                  dtype=np.int64))
    if cones is None:
        cones = collect_cones(ctx, sample_count, seed)
    stable = 0
    used = 0
    acc.trajectory.append(0)
    while used < len(cones) and stable < 3:
        before = acc.rank
        for _ in range(5):
            if used >= len(cones):
                break
            cone_obj = cones[used]
            for x in cone_obj.net.wperp:
                polar = cn.polar_cubic(ctx, cone_obj, x)
                acc.add(polar.coeffs, f"polar-{used}", p,
                        source=cone_obj.net)
            used += 1
        acc.trajectory.append(acc.rank)
        stable = stable + 1 if acc.rank == before else 0
    return acc


def in_span(acc: SpanAccumulator, coeffs: np.ndarray, p: int) -> bool:
    stacked = np.concatenate([acc.rows,
                              alg.normalize_scalar(coeffs, p)[None, :]])
    return alg.rank(stacked, p) == acc.rank


def squares_containment(ctx: CurveContext, f4: SpanAccumulator,
                        seed: int = 0, samples: int = 20) -> bool:
    """Squares of random ideal quadrics must lie inside the quartic span."""
    i2 = ctx.ideal(2)
    stream = Stream(derive_key(ctx.curve.seed, f"squares|{seed}"), "combo")
    for _ in range(samples):
        combo = stream.field_vec(ctx.p, i2.dim)
        if not combo.any():
            continue
        quadric = combo @ i2.basis % ctx.p
        square = mono.mul_forms(quadric, 2, quadric, 2, ctx.g, ctx.p)
        if not in_span(f4, square, ctx.p):
            return False
    return True


def base_locus_probe(ctx: CurveContext, spans: list[SpanAccumulator],
                     off_curve_count: int, seed: int = 0) -> dict:
    """Set-theoretic base-locus test for the accumulated systems.

    Every sampled curve point must annihilate every row; every off-curve
    probe (random plus structured: ambient quadric points, vertex points,
    secant points) must be separated by at least one row of each system."""
    p = ctx.p
    g = ctx.g
    stream = Stream(derive_key(ctx.curve.seed, f"probe|{seed}"), "pts")
    report: dict = {"off_curve_checked": 0, "violations": [],
                    "curve_points_contained": True,
                    "structured_checked": 0}
    all_pts = np.concatenate([ctx.panel, ctx.holdout])
    for acc in spans:
        evals = mono.eval_matrix(all_pts, g, acc.degree, p) @ acc.rows.T % p
        if evals.any():
            report["curve_points_contained"] = False

    def probe(point: np.ndarray, label: str) -> None:
        if cv.on_curve(ctx.curve, point):
            return
        for acc in spans:
            vals = mono.eval_matrix(point.reshape(1, -1), g, acc.degree,
                                    p) @ acc.rows.T % p
            if not vals.any():
                report["violations"].append(
                    {"label": label, "degree": acc.degree,
                     "point": [int(v) for v in point]})

    checked = 0
    budget = 20 * off_curve_count
    while checked < off_curve_count and budget:
        budget -= 1
        b = stream.field_vec(p, g)
        if not b.any() or cv.on_curve(ctx.curve, b):
            continue
        probe(b, "random")
        checked += 1
    report["off_curve_checked"] = checked

    structured = 0
    # points on an ambient ideal quadric but off the curve
    i2 = ctx.ideal(2)
    for k in range(10):
        combo = stream.field_vec(p, i2.dim)
        if not combo.any():
            continue
        gram = cv.quadric_gram(combo @ i2.basis % p, g, p)
        pt = cn._point_on_quadric(gram, stream.spawn(f"q{k}"), p)
        if pt is not None and not cv.on_curve(ctx.curve, pt):
            probe(pt, "quadric")
            structured += 1
    # points on vertices of nets used by the spans
    for acc in spans:
        for net_obj in acc.sources[:5]:
            combo = stream.field_vec(p, net_obj.wperp.shape[0])
            if not combo.any():
                continue
            pt = combo @ net_obj.wperp % p
            if pt.any() and not cv.on_curve(ctx.curve, pt):
                probe(pt, "vertex")
                structured += 1
    # points on secant lines of panel points, off the curve
    n = ctx.panel.shape[0]
    for _ in range(10):
        i = stream.integer(0, n)
        j = stream.integer(0, n)
        if i == j:
            continue
        pt = (stream.nonzero(p) * ctx.panel[i]
              + stream.nonzero(p) * ctx.panel[j]) % p
        if pt.any() and not cv.on_curve(ctx.curve, pt):
            probe(pt, "secant")
            structured += 1
    report["structured_checked"] = structured
    return report


def trajectory_csv(acc: SpanAccumulator) -> str:
    lines = ["batch,rank"]
    for k, r in enumerate(acc.trajectory):
        lines.append(f"{k},{r}")
    return "\n".join(lines) + "\n"

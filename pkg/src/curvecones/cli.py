"""Command-line driver for reproducible runs.

Subcommands: gen-curve, ideal, reconstruct, spans, hessian, verify.  All
randomness flows from the seed recorded in the curve file, so identical
invocations produce byte-identical artifacts.  Coefficient arrays are
serialized as [exponent-tuple, value] pairs in the graded-lexicographic
monomial order with z0 > z1 > ... (canonical residues in [0, p)); see the
README for the full conventions.

Exit codes: 0 success, 2 configuration error, 3 mathematical verification
failure, 4 degeneracy budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance as acc
from . import bundle as bd
from . import canring
from . import cone as cn
from . import curve as cv
from . import monomials as mono
from . import net as nt
from . import spanlab as sl
from .errors import (ConfigError, CurveConesError, DegenerateInput,
                     GenerationFailed, InconsistentReconstruction,
                     InsufficientPoints, NonGenericD,
                     UnderdeterminedReconstruction, VerificationFailed)
from .rng import Stream, derive_key

DEGENERACY_ERRORS = (GenerationFailed, InsufficientPoints, DegenerateInput,
                     UnderdeterminedReconstruction,
                     InconsistentReconstruction, NonGenericD)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_context(path: str) -> canring.CurveContext:
    curve, points = cv.load_curve(path)
    return canring.build_context(curve, points)


def cmd_gen_curve(args) -> int:
    curve = cv.generate_curve(args.genus, args.prime, args.seed)
    total = 6 * mono.count(args.genus, 4)
    points = cv.sample_points(curve, total)
    cv.save_curve(args.out, curve, points)
    print(f"wrote {args.out}: genus {args.genus}, prime {args.prime}, "
          f"{len(points)} points")
    return 0


def cmd_ideal(args) -> int:
    ctx = _load_context(args.curve)
    if not 2 <= args.degree <= 4:
        raise ConfigError("degree must be 2, 3, or 4")
    piece = ctx.ideal(args.degree)
    print(f"dim I({args.degree}) = {piece.dim}")
    payload = {
        "genus": ctx.g,
        "prime": ctx.p,
        "degree": args.degree,
        "dim": piece.dim,
        "basis": [mono.form_to_pairs(row, ctx.g, args.degree)
                  for row in piece.basis],
    }
    _write(args.out, json.dumps(payload, sort_keys=True,
                                separators=(",", ":")) + "\n")
    return 0


def cmd_reconstruct(args) -> int:
    ctx = _load_context(args.curve)
    stream = Stream(derive_key(ctx.curve.seed, f"cli-w|{args.w_seed}"), "w")
    net_obj = nt.random_net(ctx, stream)
    cone_obj = cn.reconstruct_quartic(ctx, net_obj, seed=args.w_seed)
    payload = cn.cone_to_json(cone_obj, ctx.g)
    _write(args.out, json.dumps(payload, sort_keys=True,
                                separators=(",", ":")) + "\n")
    print(f"reconstructed quartic: {cone_obj.certificate}")
    return 0


def cmd_spans(args) -> int:
    ctx = _load_context(args.curve)
    cfg = {"seed": 0, "sample_count": 25, "off_curve": 500}
    if args.config:
        with open(args.config) as fh:
            user = json.load(fh)
        for key, value in user.items():
            if key not in cfg:
                raise ConfigError(f"unknown config field '{key}'")
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"config field '{key}' must be a "
                                  f"nonnegative integer")
            cfg[key] = value
    cones = sl.collect_cones(ctx, cfg["sample_count"], cfg["seed"])
    f4 = sl.accumulate_f4(ctx, cfg["sample_count"], cfg["seed"], cones=cones)
    f3 = sl.accumulate_f3(ctx, cfg["sample_count"], cfg["seed"], cones=cones)
    probe = sl.base_locus_probe(ctx, [f4, f3], cfg["off_curve"],
                                seed=cfg["seed"])
    from . import __version__
    payload = {
        "version": __version__,
        "config": cfg,
        "curve": {"genus": ctx.g, "prime": ctx.p, "seed": ctx.curve.seed},
        "f4_rank": f4.rank,
        "f4_trajectory": f4.trajectory,
        "f3_rank": f3.rank,
        "f3_trajectory": f3.trajectory,
        "squares_contained": sl.squares_containment(ctx, f4,
                                                    seed=cfg["seed"]),
        "base_locus": {k: v for k, v in probe.items()},
        "provenance": {"f4": f4.provenance, "f3": f3.provenance},
    }
    _write(args.out, json.dumps(payload, sort_keys=True,
                                separators=(",", ":")) + "\n")
    if args.trajectory:
        _write(args.trajectory, sl.trajectory_csv(f4))
    print(f"f4 rank {f4.rank}, f3 rank {f3.rank}, "
          f"violations {len(probe['violations'])}")
    return 0


def cmd_hessian(args) -> int:
    ctx = _load_context(args.curve)
    stream = Stream(derive_key(ctx.curve.seed, f"cli-w|{args.w_seed}"), "w")
    net_obj = nt.random_net(ctx, stream)
    cone_obj = cn.reconstruct_quartic(ctx, net_obj, seed=args.w_seed)
    half = max(1, args.sweep // 2)
    scan = bd.hessian_scan(ctx, net_obj, cone_obj, half, half,
                           stream.spawn("sweep"))
    _write(args.out, bd.scan_rows_to_csv(scan["rows"]))
    print(f"on-image fibers {scan['on_checked']} "
          f"(singular {scan['on_singular']}, "
          f"kernel matches {scan['kernel_matches']}); "
          f"off-image fibers {scan['off_checked']} "
          f"(nonsingular {scan['off_nonsingular']})")
    return 0


def cmd_verify(args) -> int:
    curve, points = cv.load_curve(args.curve)
    ctx = canring.build_context(curve, points)
    if args.quick:
        # span samples must still cover the expected saturated rank (16 at
        # genus 5 with 6 of it from quadric squares)
        cfg = acc.SuiteConfig(seed=args.seed, corank_samples=10,
                              corank_engineered=2, reconstructions=3,
                              oracle_points=10, double_quadrics=2,
                              polar_oracle_points=10, fibers_on=10,
                              fibers_off=10, secant_random=10,
                              secant_engineered=1, span_samples=14,
                              off_curve_probes=60)
    else:
        cfg = acc.SuiteConfig(seed=args.seed)

    def builder():
        return canring.build_context(*cv.load_curve(args.curve))

    if args.full:
        results = acc.run_full(ctx, cfg, ctx_builder=builder, echo=print)
    else:
        results = acc.run_criteria(ctx, cfg, echo=print)
    report = acc.report_json(ctx, cfg, results)
    if args.out:
        _write(args.out, report)
    ok = all(r.ok for r in results)
    print("verification " + ("PASSED" if ok else "FAILED"))
    return 0 if ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecones",
        description="Exact finite-field verification of quartic and cubic "
                    "hypersurfaces through canonical curves.",
        epilog="Monomial order: graded, then lexicographic on exponent "
               "tuples with z0 > z1 > ...; coefficients are canonical "
               "residues in [0, p); scalar-ambiguous objects are scaled so "
               "their first nonzero coordinate is 1.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-curve", help="generate a curve file")
    g.add_argument("--genus", type=int, choices=(4, 5), required=True)
    g.add_argument("--prime", type=int, default=1000003)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen_curve)

    i = sub.add_parser("ideal", help="ideal piece basis and dimension")
    i.add_argument("--curve", required=True)
    i.add_argument("--degree", type=int, required=True)
    i.add_argument("--out", default=None)
    i.set_defaults(func=cmd_ideal)

    r = sub.add_parser("reconstruct", help="reconstruct one quartic cone")
    r.add_argument("--curve", required=True)
    r.add_argument("--w-seed", type=int, default=0)
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("spans", help="span dimensions and base-locus probe")
    s.add_argument("--curve", required=True)
    s.add_argument("--config", default=None)
    s.add_argument("--out", default=None)
    s.add_argument("--trajectory", default=None,
                   help="write the rank trajectory CSV here")
    s.set_defaults(func=cmd_spans)

    h = sub.add_parser("hessian", help="Hessian/Steinerian fiber sweep CSV")
    h.add_argument("--curve", required=True)
    h.add_argument("--w-seed", type=int, default=0)
    h.add_argument("--sweep", type=int, default=200)
    h.add_argument("--out", default=None)
    h.set_defaults(func=cmd_hessian)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--curve", required=True)
    v.add_argument("--full", action="store_true",
                   help="include the determinism double-run criterion")
    v.add_argument("--quick", action="store_true",
                   help="reduced sample sizes for a fast smoke run")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ConfigError, ValueError, FileNotFoundError, KeyError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except DEGENERACY_ERRORS as exc:
        print(f"degeneracy budget exhausted: {exc}", file=sys.stderr)
        return 4
    except CurveConesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

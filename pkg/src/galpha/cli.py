"""Command-line surface: verify, roundtrip, render, gen, norms.

Exit codes: 0 = pass, 1 = a check failed, 2 = malformed input.  Sweep
parallelism is capped by the GALPHA_THREADS environment variable
(0 or unset = auto).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .complexfn import ConvergenceError, DiskGrid, default_grid
from .family import AtomicMeasure, measure_from_blaschke
from .harmonic import HarmonicMap
from .schwarz import norms
from .specfile import (FunctionSpec, SpecFileError, dumps_spec,
                       load_function_spec, save_function_spec)
from .verify import Tolerances, blaschke_roundtrip_error, run_verification

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--grid-radii", type=int, default=64, metavar="N",
                   help="number of grid radii (default 64)")
    p.add_argument("--grid-angles", type=int, default=512, metavar="N",
                   help="angles per circle (default 512)")
    p.add_argument("--rmax", type=float, default=1.0 - 1e-4, metavar="X",
                   help="outermost grid radius (default 1 - 1e-4)")


def _add_tolerance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol-roundtrip", type=float, default=1e-8,
                   help="round-trip tolerance (default 1e-8)")
    p.add_argument("--tol-norm", type=float, default=1e-3,
                   help="norm-vs-sharp-value tolerance (default 1e-3)")
    p.add_argument("--tol-pointwise", type=float, default=1e-9,
                   help="pointwise inequality slack (default 1e-9)")


def _grid_from(args: argparse.Namespace) -> DiskGrid:
    if args.grid_radii < 2:
        raise SpecFileError("--grid-radii must be at least 2")
    if not 0.0 < args.rmax < 1.0:
        raise SpecFileError("--rmax must lie in (0, 1)")
    radii = 1.0 - np.geomspace(1.0, 1.0 - args.rmax, args.grid_radii)
    radii[0] = 0.0
    return DiskGrid(radii=radii, angles_per_circle=args.grid_angles,
                    r_max=float(radii[-1]))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galpha",
        description="Verify, analyze, and render members of the disk family "
                    "defined by Re(z h''(z)/(alpha h'(z))) < 1/2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full verification battery")
    p_verify.add_argument("spec", help="path to a function spec file")
    _add_tolerance_flags(p_verify)
    _add_grid_flags(p_verify)
    p_verify.add_argument("--out", default=None,
                          help="machine-readable report path "
                               "(default: <spec>.report.json beside the spec)")

    p_round = sub.add_parser("roundtrip",
                             help="Blaschke product -> atoms -> product round trip")
    p_round.add_argument("spec", help="spec file with a blaschke source")
    p_round.add_argument("--tol-roundtrip", type=float, default=1e-8)

    p_render = sub.add_parser("render", help="export an image-circle curve")
    p_render.add_argument("spec", help="path to a function spec file")
    p_render.add_argument("--radius", type=float, default=0.99,
                          help="circle radius (<= 1 - 1e-6, default 0.99)")
    p_render.add_argument("--samples", type=int, default=512,
                          help="samples along the circle (>= 4, default 512)")
    p_render.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_render.add_argument("--out", required=True, help="output file path")

    p_gen = sub.add_parser("gen", help="generate a reproducible random spec")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--atoms", type=int, required=True, metavar="M",
                       help="number of atoms (>= 1)")
    p_gen.add_argument("--alpha", type=float, required=True)
    p_gen.add_argument("--out", required=True, help="spec file to write")

    p_norms = sub.add_parser("norms", help="pre-Schwarzian/Schwarzian norm report")
    p_norms.add_argument("spec", help="path to a function spec file")
    _add_grid_flags(p_norms)
    p_norms.add_argument("--out", default=None, help="optional JSON report path")

    return parser


def cmd_verify(args: argparse.Namespace) -> int:
    spec = load_function_spec(args.spec)
    tol = Tolerances(roundtrip=args.tol_roundtrip, norm=args.tol_norm,
                     pointwise=args.tol_pointwise)
    report = run_verification(spec, tol=tol, grid=_grid_from(args))
    print(report.render_text())
    out = (Path(args.out) if args.out
           else Path(args.spec).with_name(Path(args.spec).stem + ".report.json"))
    out.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def cmd_roundtrip(args: argparse.Namespace) -> int:
    spec = load_function_spec(args.spec)
    if spec.blaschke is None:
        raise SpecFileError("roundtrip requires a spec with a blaschke source")
    measure = measure_from_blaschke(spec.blaschke)
    error = blaschke_roundtrip_error(spec.blaschke, measure)
    print(f"roundtrip max pointwise error on |z| <= 0.9: {error:.3e}")
    print(f"recovered atoms: {measure.count}")
    return EXIT_PASS if error < args.tol_roundtrip else EXIT_CHECK_FAILED


def _render_curve(spec: FunctionSpec, radius: float, samples: int) -> np.ndarray:
    member = spec.resolve_member()
    theta = 2.0 * np.pi * np.arange(samples) / samples
    z = radius * np.exp(1j * theta)
    if spec.dilatation is not None:
        return HarmonicMap(analytic_part=member,
                           dilatation=spec.dilatation).evaluate(z)
    return member.h(z)


def cmd_render(args: argparse.Namespace) -> int:
    spec = load_function_spec(args.spec)
    if not 0.0 < args.radius <= 1.0 - 1e-6:
        raise SpecFileError("radius must lie in (0, 1 - 1e-6]")
    if args.samples < 4:
        raise SpecFileError("samples must be at least 4")
    curve = _render_curve(spec, args.radius, args.samples)
    theta = 2.0 * np.pi * np.arange(args.samples) / args.samples
    if args.format == "csv":
        lines = ["theta,re,im"]
        lines += [f"{float(t)!r},{float(w.real)!r},{float(w.imag)!r}"
                  for t, w in zip(theta, curve)]
        Path(args.out).write_text("\n".join(lines) + "\n")
    else:
        Path(args.out).write_text(_svg_document(curve))
    return EXIT_PASS


def _svg_document(curve: np.ndarray) -> str:
    """Single-path SVG 1.1 document: the closed polyline fit to 1000 x 1000."""
    xs, ys = curve.real, curve.imag
    span = max(float(xs.max() - xs.min()), float(ys.max() - ys.min()), 1e-12)
    scale = 1000.0 / span
    x0 = (1000.0 - scale * (xs.max() - xs.min())) / 2.0 - scale * xs.min()
    # flip the imaginary axis so the curve renders in standard orientation
    y0 = 1000.0 - ((1000.0 - scale * (ys.max() - ys.min())) / 2.0 - scale * ys.min())
    px = x0 + scale * xs
    py = y0 - scale * ys
    steps = [f"M {px[0]:.4f},{py[0]:.4f}"]
    steps += [f"L {x:.4f},{y:.4f}" for x, y in zip(px[1:], py[1:])]
    steps.append(f"L {px[0]:.4f},{py[0]:.4f} Z")  # close: first point repeated
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'viewBox="0 0 1000 1000">\n'
            f'<path d="{" ".join(steps)}" fill="none" stroke="black"/>\n'
            "</svg>\n")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.atoms < 1:
        raise SpecFileError("--atoms must be at least 1")
    if not 0.0 < args.alpha <= 1.0:
        raise SpecFileError("--alpha must lie in (0, 1]")
    rng = np.random.default_rng(args.seed)
    for _ in range(64):
        angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, args.atoms))
        gaps = np.diff(np.concatenate([angles, [angles[0] + 2.0 * np.pi]]))
        if args.atoms == 1 or gaps.min() > 1e-6:
            break
    else:  # pragma: no cover - vanishing probability for sane atom counts
        raise SpecFileError("could not draw distinct atom angles")
    weights = rng.dirichlet(np.ones(args.atoms))
    measure = AtomicMeasure(angles=angles, weights=weights)
    spec = FunctionSpec(alpha=args.alpha, measure=measure)
    save_function_spec(spec, args.out)
    print(dumps_spec(spec), end="")
    return EXIT_PASS


def cmd_norms(args: argparse.Namespace) -> int:
    spec = load_function_spec(args.spec)
    member = spec.resolve_member()
    report = norms(member, grid=_grid_from(args))
    lines = [
        f"alpha                : {report.alpha!r}",
        f"pre-Schwarzian norm  : {report.pre_schwarzian_norm.value:.9f}"
        f"  (bound {report.pre_schwarzian_bound:.9f},"
        f" argmax {report.pre_schwarzian_norm.argmax:.6f})",
        f"Schwarzian norm      : {report.schwarzian_norm.value:.9f}"
        f"  (bound {report.schwarzian_bound:.9f},"
        f" argmax {report.schwarzian_norm.argmax:.6f})",
    ]
    if report.qc_constant is not None:
        lines.append(f"qc extension constant: {report.qc_constant!r}")
    print("\n".join(lines))
    if args.out:
        payload = {
            "alpha": report.alpha,
            "pre_schwarzian_norm": report.pre_schwarzian_norm.value,
            "pre_schwarzian_bound": report.pre_schwarzian_bound,
            "schwarzian_norm": report.schwarzian_norm.value,
            "schwarzian_bound": report.schwarzian_bound,
            "qc_constant": report.qc_constant,
        }
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_PASS


_COMMANDS = {
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
    "render": cmd_render,
    "gen": cmd_gen,
    "norms": cmd_norms,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SpecFileError, ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())

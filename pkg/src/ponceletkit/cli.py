"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 numerical failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from . import cmv, ellipse, numrange, poncelet, verify
from ._config import ON_CIRCLE_TOL, TOL_RANGE
from .cpoly import RootFindingError

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3

CURVE_HEADER = ["k", "theta", "point_re", "point_im", "pole_re", "pole_im"]
BOUNDARY_HEADER = ["phi", "lambda_phi", "re", "im"]


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- input


def _complex_pair(obj, what):
    if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
        raise InputError(f"{what}: expected [re, im], got {obj!r}")
    try:
        z = complex(float(obj[0]), float(obj[1]))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: {exc}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"{what}: non-finite value")
    return z


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg}, line {exc.lineno})") from None


def load_foci(path) -> np.ndarray:
    obj = _load_json(path)
    if not isinstance(obj, dict) or not isinstance(obj.get("foci"), list):
        raise InputError(f'{path}: expected {{"foci": [[re, im], ...]}}')
    return np.array([_complex_pair(p, f"foci[{i}]") for i, p in enumerate(obj["foci"])], dtype=complex)


def load_matrix(path) -> np.ndarray:
    obj = _load_json(path)
    try:
        return cmv.matrix_from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_complex(text: str) -> complex:
    """``"re,im"`` or a Python complex literal such as ``0.5-0.2j``."""
    try:
        if "," in text:
            re, im = text.split(",")
            return complex(float(re), float(im))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _samples(text):
    n = int(text)
    if n < 16:
        raise argparse.ArgumentTypeError("--samples must be at least 16")
    return n


def _tol(text):
    t = float(text)
    lo, hi = TOL_RANGE
    if not lo <= t <= hi:
        raise argparse.ArgumentTypeError(f"--tol must lie in [{lo:g}, {hi:g}]")
    return t


# ---------------------------------------------------------------- output


def _num(x: float) -> str:
    # repr gives the shortest string that parses back to the same double
    return repr(float(x))


def write_curve_csv(fh, samples):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CURVE_HEADER)
    for s in samples:
        if isinstance(s.pole, poncelet.InfinitePole):
            pole = ["", ""]
        else:
            pole = [_num(s.pole.real), _num(s.pole.imag)]
        w.writerow([s.k, _num(s.theta), _num(s.point.real), _num(s.point.imag), *pole])


def write_boundary_csv(fh, samples):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(BOUNDARY_HEADER)
    for s in samples:
        w.writerow([_num(s.phi), _num(s.lambda_phi), _num(s.boundary_point.real), _num(s.boundary_point.imag)])


def svg_document(polylines) -> str:
    """1000 x 1000 SVG of closed polylines over the square ``[-1.3, 1.3]^2``."""

    def xy(z):
        return f"{(z.real + 1.3) / 2.6 * 1000:.3f},{(1.3 - z.imag) / 2.6 * 1000:.3f}"

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="1000" height="1000" viewBox="0 0 1000 1000">',
        '<rect width="1000" height="1000" fill="white"/>',
    ]
    for pts, color in polylines:
        pts = list(pts) + [pts[0]]
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1" points="{" ".join(xy(complex(p)) for p in pts)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _circle(m=360):
    return np.exp(2j * np.pi * np.arange(m) / m)


def _emit(text_writer, out_path):
    if out_path is None:
        text_writer(sys.stdout)
    else:
        with open(out_path, "w", newline="") as fh:
            text_writer(fh)


COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


# ---------------------------------------------------------------- commands


def cmd_package(args) -> int:
    foci = load_foci(args.foci)
    if foci.size == 0:
        raise InputError("need at least one focus")
    if np.any(np.abs(foci) >= 1):
        raise InputError("foci must lie in the open unit disk; for exterior foci use the 'bezout' subcommand")
    fam = poncelet.PonceletFamily.from_foci(foci)
    samples = poncelet.sample_package(fam, args.samples)
    _emit(lambda fh: write_curve_csv(fh, samples), args.out)
    if args.svg:
        curves = [(_circle(), "black")]
        for k in range(1, fam.n // 2 + 1):
            curves.append(([s.point for s in samples if s.k == k], COLORS[(k - 1) % len(COLORS)]))
        for ang in args.lam or []:
            curves.append((fam.polygon(np.exp(1j * ang)), "gray"))
        Path(args.svg).write_text(svg_document(curves))
    return EXIT_OK


def cmd_bezout(args) -> int:
    foci = load_foci(args.foci)
    P = poncelet.bezoutian_build(foci)
    tol = args.tol if args.tol is not None else ON_CIRCLE_TOL
    print(f"N={P.N} m={P.m} d={P.d} n={P.n}")
    mirman = None
    if P.d == 0:
        mirman, mn = poncelet.mirman_condition(foci, args.samples)
        print(f"mirman={'true' if mirman else 'false'} min={_num(mn)}")
    angles = args.lam if args.lam else [0.0]
    status = EXIT_OK
    for ang in angles:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            sol = poncelet.on_circle_solutions(P, np.exp(1j * ang), tol=tol)
        for c in caught:
            print(f"warning: {c.message}", file=sys.stderr)
        print(f"z0_angle={_num(ang)} on_circle={sol.count} off_circle={sol.off_circle.size} expected={sol.expected}")
        if mirman and sol.count != sol.expected:
            print("on-circle count differs from N-1-2m-d although Mirman's condition holds", file=sys.stderr)
            status = EXIT_NUMERIC
    return status


def cmd_numrange(args) -> int:
    A = load_matrix(args.matrix)
    samples = numrange.boundary(A, args.samples)
    _emit(lambda fh: write_boundary_csv(fh, samples), args.out)
    if A.shape == (2, 2):
        e = numrange.ellipse_range_2x2(A)
        pts = np.array([s.boundary_point for s in samples])
        on = np.abs(pts - e.f1) + np.abs(pts - e.f2) - 2 * e.major
        print(f"ellipse {json.dumps(e.to_json())} max_focal_residual={_num(np.max(np.abs(on)))}", file=sys.stderr)
    if args.svg:
        pts = [s.boundary_point for s in samples]
        eig = cmv.eigenvalues(A)
        marks = [(z + 0.01 * _circle(12), "red") for z in eig]
        Path(args.svg).write_text(svg_document([(_circle(), "black"), (pts, COLORS[0]), *marks]))
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def cmd_ellipse(args) -> int:
    if args.action == "close":
        f1, f2, n = _need(args.f1, "--f1"), _need(args.f2, "--f2"), _need(args.n, "--n")
        if abs(f1) >= 1 or abs(f2) >= 1:
            raise InputError("foci must lie in the open unit disk")
        if n < 3:
            raise InputError("--n must be at least 3")
        s = ellipse.closure_semiaxis(f1, f2, n)
        print(f"s={_num(s)}")
        print(json.dumps(ellipse.EllipseComponent(f1, f2, s).to_json()))
        return EXIT_OK
    if args.action == "iterate":
        f1, f2, s = _need(args.f1, "--f1"), _need(args.f2, "--f2"), _need(args.s, "--s")
        e = ellipse.EllipseComponent(f1, f2, s)
        w0 = np.exp(1j * (args.lam[0] if args.lam else 0.0))
        orbit = ellipse.circular_iteration(e, w0, max_steps=args.max_steps)
        out = {"orbit": [[w.real, w.imag] for w in orbit], "n": orbit.n}
        if orbit.n is not None:
            out["inner"] = [[w.real, w.imag] for w in ellipse.inner_iteration(e, n=orbit.n)]
        print(json.dumps(out))
        return EXIT_OK
    # factor
    foci = load_foci(_need(args.foci, "--foci"))
    if foci.size == 0 or np.any(np.abs(foci) >= 1):
        raise InputError("factor needs at least one focus, all in the open unit disk")
    tol = args.tol if args.tol is not None else 1e-7
    comps = ellipse.package_factor(foci, seed=args.seed, tol=math.inf)
    print(json.dumps({"components": [c.to_json() for c in comps], "residual": comps.residual}))
    if comps.residual > tol:
        print(f"factorization residual {comps.residual:.3g} exceeds {tol:g}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verify.run(tuple(args.suites) or ("all",), seed=args.seed)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    report = {
        "passed": all(c.passed for checks in results.values() for c in checks),
        "suites": {name: [c.to_json() for c in checks] for name, checks in results.items()},
    }
    text = json.dumps(report, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=_samples, default=720, help="samples per curve (>= 16)")
    common.add_argument("--tol", type=_tol, default=None, help="tolerance override in [1e-14, 1e-4]")
    common.add_argument(
        "--lambda", dest="lam", type=float, action="append", metavar="ANGLE", help="angle in radians (repeatable)"
    )
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--svg", help="write an SVG diagnostic plot")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="ponceletkit", description="Poncelet curve packages on the unit circle.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("package", parents=[common], help="sample C_1..C_{n//2} to CSV")
    s.add_argument("foci", help='JSON file {"foci": [[re, im], ...]}')
    s.set_defaults(func=cmd_package)

    s = sub.add_parser("bezout", parents=[common], help="Bezoutian counts N, m, d, n and on-circle solutions")
    s.add_argument("foci")
    s.set_defaults(func=cmd_bezout)

    s = sub.add_parser("numrange", parents=[common], help="numerical range boundary to CSV")
    s.add_argument("matrix", help='JSON file {"n": int, "entries": [[[re, im], ...], ...]}')
    s.set_defaults(func=cmd_numrange)

    s = sub.add_parser("ellipse", parents=[common], help="ellipse closure, iteration and factorization")
    s.add_argument("action", choices=["close", "factor", "iterate"])
    s.add_argument("--f1", type=parse_complex)
    s.add_argument("--f2", type=parse_complex)
    s.add_argument("--n", type=int)
    s.add_argument("--s", type=float)
    s.add_argument("--foci", help="foci JSON for 'factor'")
    s.add_argument("--max-steps", type=int, default=64)
    s.set_defaults(func=cmd_ellipse)

    s = sub.add_parser("verify", parents=[common], help="run acceptance suites, JSON report")
    s.add_argument("suites", nargs="*", help=f"any of: all, {', '.join(verify.SUITES)}")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, RootFindingError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: generate, transform, convolve, solve, verify, info.

Exit codes: 0 success (verify: all checks passed), 1 a check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fileio
from .core import Signal, TfGrid, TfMap, UniformGrid, Window, make_params
from .generate import GENERATOR_KINDS, generate
from .qpft import Spectrum, matched_w_grid, qpft_forward, qpft_inverse
from .solver import SolverOptions, solve
from .suites import SUITES, render_report, run_suite
from .windowed import wqpft_forward, wqpft_inverse
from .convolution import spatial_lhs, spectral_convolve
from .qpft import chirp_convolve

USAGE_ERROR = 2


def _parse_params(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError("--params needs five comma-separated numbers a,b,c,d,e")
    try:
        return make_params(*(float(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_grid(text: str) -> UniformGrid:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid spec must be start:step:count")
    try:
        return UniformGrid(float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_kind(text: str):
    parts = text.split(":")
    kind = parts[0]
    if kind not in GENERATOR_KINDS:
        raise argparse.ArgumentTypeError(f"unknown generator kind {kind!r}")
    args = [float(p) for p in parts[1:]]
    return kind, args


def _load_window(spec: str, grid: UniformGrid) -> Window:
    if spec.startswith("gaussian:"):
        sigma = float(spec.split(":", 1)[1])
        return Window.from_signal(generate("gaussian", grid, sigma=sigma))
    sig = fileio.read_signal(spec)
    return Window.from_signal(sig)


def _write_signal(path: str, signal: Signal, as_csv: bool) -> None:
    if as_csv:
        fileio.write_signal_csv(path, signal)
    else:
        fileio.write_signal(path, signal)


def _read_signal(path: str) -> Signal:
    if path.endswith(".csv"):
        return fileio.read_signal_csv(path)
    return fileio.read_signal(path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wqpft",
                                     description="quadratic-phase time-frequency toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a deterministic signal")
    p.add_argument("--kind", type=_parse_kind, required=True,
                   help="gaussian:sigma[:x0] | chirp:sigma:rate:carrier | boxcar:half_width"
                        " | two_tone:w1:w2:sigma | noise:seed")
    p.add_argument("--xgrid", type=_parse_grid, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("qpft", help="forward transform of a signal file")
    p.add_argument("input")
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--wgrid", type=_parse_grid, default=None,
                   help="defaults to the matched full-band grid")
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("iqpft", help="inverse transform of a spectrum file")
    p.add_argument("input")
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--xgrid", type=_parse_grid, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("wqpft", help="windowed transform to a tf-map file")
    p.add_argument("input")
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--window", required=True, help="path or gaussian:sigma")
    p.add_argument("--ugrid", type=_parse_grid, required=True)
    p.add_argument("--wgrid", type=_parse_grid, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true",
                   help="also write the magnitude grid next to --out")

    p = sub.add_parser("iwqpft", help="reconstruct a signal from a tf-map file")
    p.add_argument("input")
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--window2", default=None, help="synthesis window (default: --window)")
    p.add_argument("--xgrid", type=_parse_grid, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("convolve", help="chirp, spectral, or spatial convolution")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--mode", choices=("chirp", "spectral", "spatial"), required=True)
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--window", help="required for spectral and spatial modes")
    p.add_argument("--window2", default=None, help="second window for spatial mode")
    p.add_argument("--omega", type=float, default=0.0, help="spectral-mode frequency")
    p.add_argument("--vgrid", type=_parse_grid, default=None, help="spectral-mode dual grid")
    p.add_argument("--ugrid", type=_parse_grid, default=None, help="spatial-mode center grid")
    p.add_argument("--wgrid", type=_parse_grid, default=None, help="spatial-mode frequency grid")
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("solve", help="deconvolve tau*nu + h (.) nu = f")
    p.add_argument("f")
    p.add_argument("h")
    p.add_argument("--params", type=_parse_params, required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--tau", type=complex, default=1.0 + 0.0j)
    p.add_argument("--ugrid", type=_parse_grid, required=True)
    p.add_argument("--wgrid", type=_parse_grid, required=True)
    p.add_argument("--regularization", choices=("threshold", "tikhonov"), default="threshold")
    p.add_argument("--lam", type=float, default=0.0)
    p.add_argument("--psi-floor", type=float, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--tol", type=float, default=1.0,
                   help="scale factor applied to every tolerance in the suite")
    p.add_argument("--report", default=None, help="write the key=value report here")

    p = sub.add_parser("info", help="describe a signal or tf-map file")
    p.add_argument("input")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _dispatch(args) -> int:
    if args.command == "generate":
        kind, kind_args = args.kind
        names = {
            "gaussian": ("sigma", "x0"),
            "chirp": ("sigma", "rate", "carrier"),
            "boxcar": ("half_width",),
            "two_tone": ("w1", "w2", "sigma"),
            "noise": ("seed",),
        }[kind]
        params = dict(zip(names, kind_args))
        if kind == "noise" and "seed" in params:
            params["seed"] = int(params["seed"])
        signal = generate(kind, args.xgrid, **params)
        _write_signal(args.out, signal, args.csv)
        return 0

    if args.command == "qpft":
        signal = _read_signal(args.input)
        w_grid = args.wgrid or matched_w_grid(args.params, signal.grid)
        spec = qpft_forward(signal, args.params, w_grid)
        _write_signal(args.out, Signal(spec.w_grid, spec.values), args.csv)
        return 0

    if args.command == "iqpft":
        spec_sig = _read_signal(args.input)
        spec = Spectrum(spec_sig.grid, spec_sig.samples)
        out = qpft_inverse(spec, args.params, args.xgrid)
        _write_signal(args.out, out, args.csv)
        return 0

    if args.command == "wqpft":
        signal = _read_signal(args.input)
        window = _load_window(args.window, signal.grid)
        tf = TfGrid(args.ugrid, args.wgrid)
        surface = wqpft_forward(signal, window, args.params, tf)
        fileio.write_tfmap(args.out, surface)
        if args.csv:
            fileio.write_tfmap_magnitude_csv(args.out + ".csv", surface)
        return 0

    if args.command == "iwqpft":
        surface = fileio.read_tfmap(args.input)
        window = _load_window(args.window, args.xgrid)
        window2 = _load_window(args.window2, args.xgrid) if args.window2 else window
        out = wqpft_inverse(surface, window, window2, args.params, args.xgrid)
        _write_signal(args.out, out, args.csv)
        return 0

    if args.command == "convolve":
        left = _read_signal(args.left)
        right = _read_signal(args.right)
        if args.mode == "chirp":
            out = chirp_convolve(left, right, args.params.a, args.params.b)
            _write_signal(args.out, out, args.csv)
            return 0
        if not args.window:
            print("error: --window is required for this mode", file=sys.stderr)
            return USAGE_ERROR
        window = _load_window(args.window, left.grid)
        if args.mode == "spectral":
            if args.vgrid is None:
                print("error: --vgrid is required for spectral mode", file=sys.stderr)
                return USAGE_ERROR
            out = spectral_convolve(left, right, window, args.params, args.omega,
                                    args.vgrid, left.grid)
            _write_signal(args.out, out, args.csv)
            return 0
        # spatial: emit the transform surface of the composite pair
        if args.ugrid is None or args.wgrid is None:
            print("error: --ugrid and --wgrid are required for spatial mode", file=sys.stderr)
            return USAGE_ERROR
        window2 = _load_window(args.window2, left.grid) if args.window2 else window
        surface = spatial_lhs(left, right, window, window2, args.params,
                              TfGrid(args.ugrid, args.wgrid))
        fileio.write_tfmap(args.out, surface)
        if args.csv:
            fileio.write_tfmap_magnitude_csv(args.out + ".csv", surface)
        return 0

    if args.command == "solve":
        f = _read_signal(args.f)
        h = _read_signal(args.h)
        window = _load_window(args.window, f.grid)
        opts = SolverOptions(tau=args.tau, tf=TfGrid(args.ugrid, args.wgrid),
                             psi_floor=args.psi_floor,
                             regularization=args.regularization, lam=args.lam)
        result = solve(f, h, window, args.params, opts, f.grid)
        _write_signal(args.out, result.nu, args.csv)
        print(f"residual={result.residual!r}")
        print(f"min_abs_psi={result.diagnostics.min_abs_psi!r}")
        return 0

    if args.command == "verify":
        reports = run_suite(args.suite, tol_scale=args.tol)
        text = render_report(reports)
        if args.report:
            with open(args.report, "w") as fh:
                fh.write(text)
        failed = [r for r in reports if not r.passed]
        for rep in reports:
            status = "pass" if rep.passed else "FAIL"
            print(f"{status} {rep.identity_name} rel_defect={rep.rel_defect!r} tol={rep.tolerance!r}")
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
        return 0 if not failed else 1

    if args.command == "info":
        item = fileio.read_any(args.input)
        if isinstance(item, Signal):
            print("kind=signal")
            print(f"axis={item.grid.describe()} step={item.grid.step!r}")
            print(f"max_abs={float(np.max(np.abs(item.samples)))!r}")
        else:
            print("kind=tfmap")
            print(f"u_axis={item.tf_grid.u_grid.describe()} step={item.tf_grid.u_grid.step!r}")
            print(f"w_axis={item.tf_grid.w_grid.describe()} step={item.tf_grid.w_grid.step!r}")
            print(f"max_abs={float(np.max(np.abs(item.values)))!r}")
        return 0

    raise ValueError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())

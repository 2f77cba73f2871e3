"""Fixture corpus and the named verification checks behind `verify`.

Every algebraic fact the library claims is bound here to a named check with a
pinned tolerance so the whole set can run as one deterministic suite. Checks
pick grids that honor their own preconditions (boundary decay, lattice
alignment, dual-band coverage); the TOLERANCES table is the single place
tolerances live.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import convolution as conv
from . import qpft as qp
from . import solver as slv
from . import windowed as wq
from .core import (
    DefectReport,
    QpftParams,
    Signal,
    TfGrid,
    TfMap,
    UniformGrid,
    Window,
    inequality_report,
    inner_product,
    make_params,
    signal_norm,
    trapezoid_weights,
)
from .generate import generate, lcg_doubles
from .quadrature import ResolutionWarning

__all__ = [
    "TOLERANCES",
    "CORPUS_LAMBDAS",
    "CorpusCase",
    "fixture_corpus",
    "run_suite",
    "render_report",
    "SUITES",
    "CHECKS",
    "REQUIRED_IDENTITIES",
]

CORPUS_LAMBDAS = (
    make_params(0, 1, 0, 0, 0),
    make_params(1, 2, 0.5, 0.3, 0.7),
    make_params(0.5, 1, 0.3, 0.1, 0.2),
    make_params(-0.5, 1.5, 0, 0, 0),
)

TOLERANCES = {
    "qpft.gaussian_oracle": 1e-6,
    "qpft.roundtrip": 1e-5,
    "qpft.parseval": 1e-5,
    "qpft.linearity": 1e-12,
    "qpft.convolution": 1e-4,
    "qpft.rl_gaussian_envelope": 1e-6,
    "qpft.rl_boxcar_decay": 0.0,
    "qpft.rl_outer_monotone": 1e-9,
    "qpft.chirp_norm_bound": 1e-6,
    "wqpft.row_equivalence": 1e-10,
    "wqpft.wft_reduction_exact": 1e-10,
    "wqpft.identity.linearity": 1e-4,
    "wqpft.identity.window_conjugate_linearity": 1e-4,
    "wqpft.identity.time_shift": 1e-4,
    "wqpft.identity.modulation": 1e-4,
    "wqpft.identity.conjugation": 1e-4,
    "wqpft.identity.parity": 1e-4,
    "wqpft.identity.switching": 1e-4,
    "wqpft.identity.time_marginal": 1e-4,
    "wqpft.identity.wft_reduction": 1e-4,
    "wqpft.reconstruction": 1e-3,
    "wqpft.rk_fixed_point": 1e-3,
    "wqpft.rk_range_separation": 1e-1,
    "wqpft.energy": 1e-3,
    "wqpft.rl_envelope": 1e-6,
    "wqpft.minkowski_bound": 1e-6,
    "wqpft.continuity_modulus": 1e-6,
    "convolution.spectral_product_algebra": 1e-15,
    "convolution.spectral_consistency": 5e-2,
    "convolution.spectral_refinement": 1.0,
    "convolution.spatial_theorem": 1e-2,
    "convolution.spatial_convergence": 0.5,
    "convolution.sup_norm_bound": 1e-6,
    "convolution.spectral_norm_bound": 1e-6,
    "convolution.young_bound": 1e-6,
    "solver.degenerate_identity": 1e-6,
    "solver.manufactured_recovery": 1e-3,
    "solver.manufactured_residual": 1e-5,
    "solver.tau_scaling": 1e-10,
    "solver.two_mode_agreement": 1e-4,
    "solver.conditioning_profile": math.inf,
}

# Identity variants that must each have a registered executor (coverage lock).
REQUIRED_IDENTITIES = tuple(f"wqpft.identity.{v}" for v in wq.IDENTITY_VARIANTS)


@dataclass(frozen=True)
class CorpusCase:
    label: str
    signal: Signal
    window: Window
    params: QpftParams


@functools.lru_cache(maxsize=4)
def _x_grid(count: int, half_span: float = 8.0) -> UniformGrid:
    return UniformGrid.symmetric(half_span, count)


@functools.lru_cache(maxsize=4)
def _signals(count: int, half_span: float = 8.0) -> tuple[tuple[str, Signal], ...]:
    grid = _x_grid(count, half_span)
    x = grid.points()
    taper = np.exp(-(x ** 2) / (2.0 * 1.5 ** 2))
    noise = generate("noise", grid, seed=42)
    out = []
    for sigma in (0.5, 1.0, 2.0):
        out.append((f"gaussian{sigma:g}", generate("gaussian", grid, sigma=sigma)))
    out.append(("chirp", generate("chirp", grid, sigma=1.0, rate=0.5, carrier=3.0)))
    out.append(("boxcar", generate("boxcar", grid, half_width=1.0)))
    out.append(("two_tone", generate("two_tone", grid, w1=1.5, w2=-2.5, sigma=2.0)))
    # tapered so the corpus entry satisfies the boundary-decay precondition
    out.append(("noise", Signal(grid, noise.samples * taper)))
    return tuple(out)


@functools.lru_cache(maxsize=4)
def _windows(count: int, half_span: float = 8.0) -> tuple[tuple[str, Window], ...]:
    grid = _x_grid(count, half_span)
    return (
        ("gwin0.5", Window.from_signal(generate("gaussian", grid, sigma=0.5))),
        ("gwin1", Window.from_signal(generate("gaussian", grid, sigma=1.0))),
        ("bwin1", Window.from_signal(generate("boxcar", grid, half_width=1.0))),
    )


def fixture_corpus(count: int = 1025, half_span: float = 8.0) -> list[CorpusCase]:
    """The 60-case standard corpus: 5 signal kinds x 3 windows x 4 parameter sets.

    The gaussian slot cycles its width over {0.5, 1, 2} with the window and
    parameter indices so all three widths appear. Ordered parameter-major so
    kernel caches stay warm. The default grid does not give the widest
    entries 1e-10 boundary decay; whole-line checks (round trips, Parseval)
    realize the same corpus on a wider span at the same step.
    """
    signals = dict(_signals(count, half_span))
    windows = _windows(count, half_span)
    cases = []
    for il, lam in enumerate(CORPUS_LAMBDAS):
        for iw, (wlabel, win) in enumerate(windows):
            sigma = (0.5, 1.0, 2.0)[(il + iw) % 3]
            kinds = [
                (f"gaussian{sigma:g}", signals[f"gaussian{sigma:g}"]),
                ("chirp", signals["chirp"]),
                ("boxcar", signals["boxcar"]),
                ("two_tone", signals["two_tone"]),
                ("noise", signals["noise"]),
            ]
            for slabel, sig in kinds:
                cases.append(CorpusCase(f"{slabel}|{wlabel}|L{il}", sig, win, lam))
    return cases


def _l2_report(name: str, reference: Signal, candidate: Signal, tolerance: float,
               meta: str) -> DefectReport:
    err = signal_norm(Signal(reference.grid, candidate.samples - reference.samples), 2)
    ref = signal_norm(reference, 2)
    rel = err / ref if ref > 0 else 0.0
    max_abs = float(np.max(np.abs(candidate.samples - reference.samples)))
    return DefectReport(name, max_abs, rel, meta, rel <= tolerance, tolerance)


def _tol(name: str, scale: float) -> float:
    return TOLERANCES[name] * scale


# ----------------------------------------------------------------------------
# qpft checks


def check_qpft_gaussian_oracle(scale: float = 1.0) -> list[DefectReport]:
    from .quadrature import oracle_qpft_gaussian

    grid = _x_grid(1025)
    f = generate("gaussian", grid, sigma=1.0)
    w_grid = UniformGrid.symmetric(10.0, 401)
    reports = []
    for il, lam in enumerate(CORPUS_LAMBDAS):
        spec = qp.qpft_forward(f, lam, w_grid)
        expected = oracle_qpft_gaussian(0.5, lam, w_grid.points())
        reports.append(_array_report(f"qpft.gaussian_oracle/L{il}", spec.values, expected,
                                     _tol("qpft.gaussian_oracle", scale),
                                     f"x{grid.describe()} w{w_grid.describe()}"))
    return reports


def _array_report(name, lhs, rhs, tolerance, meta):
    from .core import defect_report

    return defect_report(name, lhs, rhs, tolerance, meta)


def check_qpft_roundtrip(scale: float = 1.0) -> list[DefectReport]:
    reports = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResolutionWarning)
        for case in fixture_corpus(1281, 10.0):
            w_grid = qp.matched_w_grid(case.params, case.signal.grid)
            spec = qp.qpft_forward(case.signal, case.params, w_grid)
            back = qp.qpft_inverse(spec, case.params, case.signal.grid)
            reports.append(_l2_report(f"qpft.roundtrip/{case.label}", case.signal, back,
                                      _tol("qpft.roundtrip", scale),
                                      f"x{case.signal.grid.describe()} w{w_grid.describe()}"))
    return reports


def check_qpft_parseval(scale: float = 1.0) -> list[DefectReport]:
    reports = []
    tol = _tol("qpft.parseval", scale)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResolutionWarning)
        for case in fixture_corpus(1281, 10.0):
            w_grid = qp.matched_w_grid(case.params, case.signal.grid)
            rep = qp.parseval_defect(case.signal, case.signal, case.params, w_grid, tolerance=tol)
            reports.append(DefectReport(f"qpft.parseval/{case.label}", rep.max_abs_defect,
                                        rep.rel_defect, rep.grid_meta, rep.passed, rep.tolerance))
        # distinct pairs exercise the cross form
        grid = _x_grid(1025)
        pairs = [
            (generate("gaussian", grid, sigma=1.0), generate("gaussian", grid, sigma=1.0, x0=1.0)),
            (generate("gaussian", grid, sigma=0.5), generate("chirp", grid)),
        ]
        for k, (f, g) in enumerate(pairs):
            lam = CORPUS_LAMBDAS[1]
            w_grid = qp.matched_w_grid(lam, grid)
            rep = qp.parseval_defect(f, g, lam, w_grid, tolerance=tol)
            reports.append(DefectReport(f"qpft.parseval/pair{k}", rep.max_abs_defect,
                                        rep.rel_defect, rep.grid_meta, rep.passed, rep.tolerance))
    return reports


def check_qpft_linearity(scale: float = 1.0) -> list[DefectReport]:
    grid = _x_grid(1025)
    f = generate("gaussian", grid, sigma=1.0)
    g = generate("chirp", grid)
    w_grid = UniformGrid.symmetric(20.0, 801)
    reports = []
    for il, lam in enumerate(CORPUS_LAMBDAS):
        combo = Signal(grid, 2.0 * f.samples - 1.5j * g.samples)
        lhs = qp.qpft_forward(combo, lam, w_grid).values
        rhs = 2.0 * qp.qpft_forward(f, lam, w_grid).values - 1.5j * qp.qpft_forward(g, lam, w_grid).values
        reports.append(_array_report(f"qpft.linearity/L{il}", lhs, rhs,
                                     _tol("qpft.linearity", scale), f"w{w_grid.describe()}"))
    return reports


def _conv_grid() -> UniformGrid:
    return UniformGrid.symmetric(12.0, 1537)


def check_qpft_convolution(scale: float = 1.0) -> list[DefectReport]:
    grid = _conv_grid()
    gauss1 = generate("gaussian", grid, sigma=1.0)
    gauss05 = generate("gaussian", grid, sigma=0.5)
    gauss_sh = generate("gaussian", grid, sigma=0.8, x0=0.7)
    chirped = generate("chirp", grid, sigma=1.0, rate=0.3, carrier=1.0)
    pairs = [(gauss1, gauss1), (gauss1, gauss05), (gauss05, gauss_sh)]
    reports = []
    tol = _tol("qpft.convolution", scale)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResolutionWarning)
        for il, lam in enumerate(CORPUS_LAMBDAS):
            w_grid = qp.matched_w_grid(lam, grid, span_factor=1)
            for k, (f, g) in enumerate(pairs):
                rep = qp.qpft_convolution_defect(f, g, lam, w_grid, tolerance=tol)
                reports.append(DefectReport(f"qpft.convolution/L{il}p{k}", rep.max_abs_defect,
                                            rep.rel_defect, rep.grid_meta, rep.passed, rep.tolerance))
        # one chirped pair at the mixed-parameter point
        rep = qp.qpft_convolution_defect(gauss1, chirped, CORPUS_LAMBDAS[2],
                                         qp.matched_w_grid(CORPUS_LAMBDAS[2], grid, span_factor=1),
                                         tolerance=tol)
        reports.append(DefectReport("qpft.convolution/chirped", rep.max_abs_defect,
                                    rep.rel_defect, rep.grid_meta, rep.passed, rep.tolerance))
    return reports


def check_qpft_riemann_lebesgue(scale: float = 1.0) -> list[DefectReport]:
    grid = _x_grid(1025)
    f = generate("gaussian", grid, sigma=1.0)
    reports = []
    w_grid = UniformGrid.symmetric(20.0, 1601)
    for il, lam in enumerate(CORPUS_LAMBDAS):
        profile = qp.rl_decay_profile(f, lam, w_grid)
        outer = profile[-1][1]
        reports.append(inequality_report(f"qpft.rl_gaussian_envelope/L{il}", outer,
                                         _tol("qpft.rl_gaussian_envelope", scale),
                                         f"w{w_grid.describe()}", slack=0.0))
        # outer quarter of bins must be non-increasing (clipped at a noise floor)
        vals = np.array([v for _, v in profile])
        floor = 1e-13 * float(vals.max())
        outer_vals = np.maximum(vals[-len(vals) // 4:], floor)
        rise = float(np.max(np.diff(outer_vals) / np.maximum(outer_vals[:-1], floor)))
        reports.append(DefectReport(f"qpft.rl_outer_monotone/L{il}", max(0.0, rise),
                                    max(0.0, rise), f"w{w_grid.describe()}",
                                    rise <= _tol("qpft.rl_outer_monotone", scale),
                                    _tol("qpft.rl_outer_monotone", scale)))
    box = generate("boxcar", grid, half_width=1.0)
    wide = UniformGrid.symmetric(44.0, 3521)
    profile = qp.rl_decay_profile(box, CORPUS_LAMBDAS[0], wide, n_bins=12)
    def bin_at(target):
        return min(profile, key=lambda kv: abs(kv[0] - target))[1]
    reports.append(inequality_report("qpft.rl_boxcar_decay", bin_at(40.0), bin_at(10.0),
                                     f"w{wide.describe()}", slack=0.0))
    return reports


def check_qpft_chirp_norm_bound(scale: float = 1.0) -> list[DefectReport]:
    grid = _x_grid(513)
    reports = []
    slack = _tol("qpft.chirp_norm_bound", scale)
    for k in range(6):
        draws = lcg_doubles(100 + k, 4)
        sf = 0.6 + 0.5 * abs(draws[0])
        sg = 0.6 + 0.5 * abs(draws[1])
        a = draws[2]
        b = 0.8 + abs(draws[3])
        f = generate("gaussian", grid, sigma=sf)
        g = generate("chirp", grid, sigma=sg, rate=0.4, carrier=1.0)
        out = qp.chirp_convolve(f, g, a, b)
        lhs = signal_norm(out, math.inf)
        const = math.sqrt(abs(b) / (2.0 * math.pi))
        for (p, q) in ((1.0, math.inf), (2.0, 2.0)):
            rhs = const * signal_norm(f, p) * signal_norm(g, q)
            reports.append(inequality_report(f"qpft.chirp_norm_bound/c{k}p{p:g}", lhs, rhs,
                                             f"a={a:.3f} b={b:.3f}", slack=slack))
    return reports


# ----------------------------------------------------------------------------
# windowed-transform checks

SURFACE_N = 257


def _surface_grid() -> UniformGrid:
    return _x_grid(SURFACE_N)


def _identity_tf() -> TfGrid:
    return TfGrid(UniformGrid.symmetric(4.0, 33), UniformGrid.symmetric(10.0, 41))


def _marginal_tf() -> TfGrid:
    return TfGrid(UniformGrid.symmetric(14.0, 113), UniformGrid.symmetric(10.0, 41))


def _recon_tf(n: int = 129) -> TfGrid:
    return TfGrid(UniformGrid.symmetric(16.0, n), UniformGrid.symmetric(20.0, n))


def _rk_tf() -> TfGrid:
    return TfGrid(UniformGrid.symmetric(16.0, 65), UniformGrid.symmetric(20.0, 97))


def _identity_cases() -> list[CorpusCase]:
    grid = _surface_grid()
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    cases = []
    for il, lam in enumerate(CORPUS_LAMBDAS):
        cases.append(CorpusCase(f"gauss|gwin0.5|L{il}", signals["gaussian1"], windows["gwin0.5"], lam))
        cases.append(CorpusCase(f"chirp|gwin1|L{il}", signals["chirp"], windows["gwin1"], lam))
    cases.append(CorpusCase("boxcar|bwin1|L0", signals["boxcar"], windows["bwin1"], CORPUS_LAMBDAS[0]))
    cases.append(CorpusCase("two_tone|gwin1|L0", signals["two_tone"], windows["gwin1"], CORPUS_LAMBDAS[0]))
    return cases


def check_wqpft_row_equivalence(scale: float = 1.0) -> list[DefectReport]:
    w_grid = UniformGrid.symmetric(10.0, 41)
    reports = []
    tol = _tol("wqpft.row_equivalence", scale)
    for case in _identity_cases()[:8]:
        for u in (0.0, 0.5, -1.25):
            direct = wq.wqpft_row(case.signal, case.window, case.params, u, w_grid.points())
            via = wq.wqpft_via_qpft(case.signal, case.window, case.params, u, w_grid).values
            reports.append(_array_report(f"wqpft.row_equivalence/{case.label}u{u:g}", direct, via,
                                         tol, f"w{w_grid.describe()}"))
    return reports


def check_wqpft_wft_reduction_exact(scale: float = 1.0) -> list[DefectReport]:
    lam0 = CORPUS_LAMBDAS[0]
    tf = _identity_tf()
    reports = []
    tol = _tol("wqpft.wft_reduction_exact", scale)
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    for slabel, wlabel in (("gaussian1", "gwin0.5"), ("chirp", "gwin1"),
                           ("boxcar", "bwin1"), ("noise", "gwin1")):
        rep = wq.identity_defect("wft_reduction", signals[slabel], windows[wlabel], lam0, tf,
                                 tolerance=tol)
        reports.append(DefectReport(f"wqpft.wft_reduction_exact/{slabel}|{wlabel}",
                                    rep.max_abs_defect, rep.rel_defect, rep.grid_meta,
                                    rep.passed, rep.tolerance))
    return reports


def check_wqpft_identities(scale: float = 1.0) -> list[DefectReport]:
    reports = []
    for variant in wq.IDENTITY_VARIANTS:
        tol = _tol(f"wqpft.identity.{variant}", scale)
        tf = _marginal_tf() if variant == "time_marginal" else _identity_tf()
        for case in _identity_cases():
            rep = wq.identity_defect(variant, case.signal, case.window, case.params, tf,
                                     tolerance=tol)
            reports.append(DefectReport(f"wqpft.identity.{variant}/{case.label}",
                                        rep.max_abs_defect, rep.rel_defect, rep.grid_meta,
                                        rep.passed, rep.tolerance))
    return reports


def check_wqpft_reconstruction(scale: float = 1.0, tf: TfGrid | None = None) -> list[DefectReport]:
    tf = tf or _recon_tf()
    grid = _surface_grid()
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    psi15 = Window.from_signal(generate("gaussian", grid, sigma=1.5))
    tol = _tol("wqpft.reconstruction", scale)
    combos = [
        ("gauss|gwin1|L0", signals["gaussian1"], windows["gwin1"], windows["gwin1"], CORPUS_LAMBDAS[0]),
        ("chirp|gwin1|L2", signals["chirp"], windows["gwin1"], windows["gwin1"], CORPUS_LAMBDAS[2]),
        ("gauss05|gwin0.5|L2", signals["gaussian0.5"], windows["gwin0.5"], windows["gwin0.5"], CORPUS_LAMBDAS[2]),
        ("gauss|gwin1+psi1.5|L0", signals["gaussian1"], windows["gwin1"], psi15, CORPUS_LAMBDAS[0]),
    ]
    reports = []
    for label, f, phi, psi, lam in combos:
        surface = wq.wqpft_forward(f, phi, lam, tf, warn_dropped=False)
        back = wq.wqpft_inverse(surface, phi, psi, lam, grid)
        reports.append(_l2_report(f"wqpft.reconstruction/{label}", f, back, tol, tf.describe()))
    return reports


def check_wqpft_rk(scale: float = 1.0, tf: TfGrid | None = None) -> list[DefectReport]:
    tf = tf or _rk_tf()
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    reports = []
    tol = _tol("wqpft.rk_fixed_point", scale)
    for label, f, phi, lam in (
        ("gauss|gwin1|L0", signals["gaussian1"], windows["gwin1"], CORPUS_LAMBDAS[0]),
        ("chirp|gwin1|L2", signals["chirp"], windows["gwin1"], CORPUS_LAMBDAS[2]),
    ):
        m = wq.wqpft_forward(f, phi, lam, tf, warn_dropped=False)
        proj = wq.rk_project(m, phi, lam)
        num = float(np.sqrt(np.sum(np.abs(proj.values - m.values) ** 2)))
        den = float(np.sqrt(np.sum(np.abs(m.values) ** 2)))
        rel = num / den
        reports.append(DefectReport(f"wqpft.rk_fixed_point/{label}", float(np.max(np.abs(proj.values - m.values))),
                                    rel, tf.describe(), rel <= tol, tol))
    # out-of-range separation: white surface must move a lot under projection
    draws = lcg_doubles(7, 2 * tf.u_grid.count * tf.w_grid.count)
    vals = (draws[0::2] + 1j * draws[1::2]).reshape(tf.u_grid.count, tf.w_grid.count)
    noise_map = TfMap(tf, vals)
    proj = wq.rk_project(noise_map, windows["gwin1"], CORPUS_LAMBDAS[0])
    rel = float(np.sqrt(np.sum(np.abs(proj.values - noise_map.values) ** 2))
                / np.sqrt(np.sum(np.abs(noise_map.values) ** 2)))
    sep = _tol("wqpft.rk_range_separation", scale)
    reports.append(DefectReport("wqpft.rk_range_separation", rel, rel,
                                f"{tf.describe()} (must exceed threshold)", rel > sep, sep))
    return reports


def check_wqpft_energy(scale: float = 1.0) -> list[DefectReport]:
    tf = _recon_tf()
    grid = _surface_grid()
    x = grid.points()
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    tol = _tol("wqpft.energy", scale)
    odd = Signal(grid, x * np.exp(-x ** 2 / 2.0))
    complex_phi = Window.from_signal(Signal(grid, np.exp(-x ** 2 / 2.0) * np.exp(0.4j * x)))
    complex_psi = Window.from_signal(Signal(grid, np.exp(-x ** 2 / (2 * 0.8 ** 2)) * np.exp(-0.3j * x ** 2)))
    combos = [
        ("isometry|L0", signals["gaussian1"], signals["gaussian1"], windows["gwin1"], windows["gwin1"], CORPUS_LAMBDAS[0]),
        ("orthogonal|L0", signals["gaussian1"], odd, windows["gwin1"], windows["gwin0.5"], CORPUS_LAMBDAS[0]),
        ("complex_windows|L2", signals["gaussian1"], signals["gaussian0.5"], complex_phi, complex_psi, CORPUS_LAMBDAS[2]),
        ("cross|L1", signals["gaussian0.5"], signals["chirp"], windows["gwin0.5"], windows["gwin1"], CORPUS_LAMBDAS[1]),
    ]
    reports = []
    for label, f, g, phi, psi, lam in combos:
        rep = wq.energy_defect(f, g, phi, psi, lam, tf, tolerance=tol)
        reports.append(DefectReport(f"wqpft.energy/{label}", rep.max_abs_defect, rep.rel_defect,
                                    rep.grid_meta, rep.passed, rep.tolerance))
    return reports


def check_wqpft_riemann_lebesgue(scale: float = 1.0) -> list[DefectReport]:
    tf = TfGrid(UniformGrid.symmetric(4.0, 17), UniformGrid.symmetric(20.0, 161))
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    tol = _tol("wqpft.rl_envelope", scale)
    reports = []
    for il, lam in enumerate(CORPUS_LAMBDAS):
        surface = wq.wqpft_forward(signals["gaussian1"], windows["gwin0.5"], lam, tf,
                                   warn_dropped=False)
        absw = np.abs(tf.w_grid.points())
        outer = float(np.max(np.abs(surface.values[:, absw >= 0.75 * absw.max()])))
        reports.append(inequality_report(f"wqpft.rl_envelope/L{il}", outer, tol,
                                         tf.describe(), slack=0.0))
    return reports


def check_wqpft_minkowski(scale: float = 1.0) -> list[DefectReport]:
    tf = _recon_tf()
    slack = _tol("wqpft.minkowski_bound", scale)
    reports = []
    for case in _identity_cases()[:6]:
        for p in (1.0, 2.0, 4.0):
            rep = wq.minkowski_bound_check(case.signal, case.window, case.params, p, tf)
            reports.append(DefectReport(f"wqpft.minkowski_bound/{case.label}p{p:g}",
                                        rep.max_abs_defect, rep.rel_defect, rep.grid_meta,
                                        rep.rel_defect <= slack, slack))
    return reports


def check_wqpft_continuity(scale: float = 1.0) -> list[DefectReport]:
    tf = TfGrid(UniformGrid.symmetric(8.0, 257), UniformGrid.symmetric(8.0, 257))
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    slack = _tol("wqpft.continuity_modulus", scale)
    reports = []
    for label, lam in (("L0", CORPUS_LAMBDAS[0]), ("L2", CORPUS_LAMBDAS[2])):
        f, phi = signals["gaussian1"], windows["gwin1"]
        step_u, step_w = tf.u_grid.step, tf.w_grid.step
        m1 = wq.continuity_modulus(f, phi, lam, tf, step_u, step_w)
        m2 = wq.continuity_modulus(f, phi, lam, tf, 2 * step_u, 2 * step_w)
        peak = float(np.max(np.abs(wq.wqpft_forward(f, phi, lam, tf, warn_dropped=False).values)))
        meta = f"{tf.describe()} one_step={m1!r} two_step={m2!r} ratio={m2 / m1!r}"
        reports.append(inequality_report(f"wqpft.continuity_modulus/{label}", m1, 0.25 * peak,
                                         meta, slack=slack))
    return reports


# ----------------------------------------------------------------------------
# convolution checks


def check_spectral_product_algebra(scale: float = 1.0) -> list[DefectReport]:
    signals = dict(_signals(SURFACE_N))
    windows = dict(_windows(SURFACE_N))
    tf = _identity_tf()
    lam = CORPUS_LAMBDAS[2]
    f, g = signals["gaussian1"], signals["chirp"]
    phi = windows["gwin0.5"]
    tol = _tol("convolution.spectral_product_algebra", scale)
    fg = conv.spectral_product(f, g, phi, lam, tf).values
    gf = conv.spectral_product(g, f, phi, lam, tf).values
    reports = [_array_report("convolution.spectral_product_algebra/commute", fg, gf, tol, tf.describe())]
    f2 = Signal(f.grid, 2.0 * f.samples)
    scaled = conv.spectral_product(f2, g, phi, lam, tf).values
    reports.append(_array_report("convolution.spectral_product_algebra/scale", scaled, 2.0 * fg,
                                 tol, tf.describe()))
    return reports


def _spectral_defect(lam: QpftParams, n_u: int, n_v: int) -> float:
    grid = _surface_grid()
    x = grid.points()
    f = Signal(grid, np.exp(-x ** 2 / 2.0) * np.exp(0.2j * x ** 2))
    g = generate("gaussian", grid, sigma=1.2, x0=0.3)
    phi = Window.from_signal(generate("gaussian", grid, sigma=0.5))
    omega = 0.5
    v_half = 5.26 / (0.5 * abs(lam.b))
    v_grid = UniformGrid.symmetric(v_half, n_v)
    u_grid = UniformGrid.symmetric(8.0, n_u)
    out = conv.spectral_convolve(f, g, phi, lam, omega, v_grid, grid)
    u = u_grid.points()
    freq = np.array([omega])
    lhs = np.array([wq.wqpft_row(out, phi, lam, float(uc), freq)[0] for uc in u])
    rf = np.array([wq.wqpft_row(f, phi, lam, float(uc), freq)[0] for uc in u])
    rg = np.array([wq.wqpft_row(g, phi, lam, float(uc), freq)[0] for uc in u])
    rhs = rf * rg
    return float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(rhs)))


def check_spectral_consistency(scale: float = 1.0) -> list[DefectReport]:
    reports = []
    tol = _tol("convolution.spectral_consistency", scale)
    for label, lam in (("L2", CORPUS_LAMBDAS[2]), ("L0", CORPUS_LAMBDAS[0])):
        coarse = _spectral_defect(lam, 65, 33)
        fine = _spectral_defect(lam, 129, 65)
        reports.append(DefectReport(f"convolution.spectral_consistency/{label}", coarse, coarse,
                                    f"65x33 refined={fine!r}", coarse <= tol, tol))
        ratio = fine / coarse if coarse > 0 else 0.0
        rtol = _tol("convolution.spectral_refinement", scale)
        reports.append(DefectReport(f"convolution.spectral_refinement/{label}", fine, ratio,
                                    f"coarse={coarse!r} fine={fine!r}", ratio <= rtol, rtol))
    return reports


def _spatial_pair(lam: QpftParams, n_m: int) -> tuple[np.ndarray, np.ndarray, TfGrid]:
    grid = _surface_grid()
    f = generate("gaussian", grid, sigma=1.0)
    g = generate("gaussian", grid, sigma=0.8, x0=0.5)
    phi = Window.from_signal(generate("gaussian", grid, sigma=0.7))
    psi = Window.from_signal(generate("gaussian", grid, sigma=1.0))
    tf = TfGrid(UniformGrid.symmetric(3.0, 33), UniformGrid.symmetric(4.0, 33))
    lhs = conv.spatial_lhs(f, g, phi, psi, lam, tf).values
    rhs = conv.spatial_rhs(f, g, phi, psi, lam, tf, UniformGrid.symmetric(8.0, n_m)).values
    return lhs, rhs, tf


def check_spatial_theorem(scale: float = 1.0) -> list[DefectReport]:
    reports = []
    tol = _tol("convolution.spatial_theorem", scale)
    for label, lam in (("a0", CORPUS_LAMBDAS[0]), ("a05", make_params(0.5, 1, 0.2, 0, 0))):
        lhs, rhs, tf = _spatial_pair(lam, 257)
        dev = float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(lhs)))
        reports.append(DefectReport(f"convolution.spatial_theorem/{label}", dev, dev,
                                    f"{tf.describe()} m=257 sign=+", dev <= tol, tol))
    lam = make_params(0.5, 1, 0.2, 0, 0)
    lhs, rhs_c, tf = _spatial_pair(lam, 17)
    lhs, rhs_f, _ = _spatial_pair(lam, 33)
    dev_c = float(np.max(np.abs(lhs - rhs_c)) / np.max(np.abs(lhs)))
    dev_f = float(np.max(np.abs(lhs - rhs_f)) / np.max(np.abs(lhs)))
    ratio = dev_f / dev_c if dev_c > 0 else 0.0
    rtol = _tol("convolution.spatial_convergence", scale)
    reports.append(DefectReport("convolution.spatial_convergence", dev_f, ratio,
                                f"m17={dev_c!r} m33={dev_f!r}", ratio <= rtol, rtol))
    return reports


def _inequality_corpus(n_cases: int) -> list[tuple[str, Signal, Signal, Window, QpftParams]]:
    grid = _surface_grid()
    x = grid.points()
    out = []
    for k in range(n_cases):
        draws = lcg_doubles(500 + k, 8)
        sf = 1.0 + abs(draws[0])          # keep signals wider than the window
        sg = 1.0 + abs(draws[1])
        rate = 0.3 * draws[2]
        b = 0.8 + 0.6 * abs(draws[3])
        a = 0.4 * draws[4]
        c = 0.3 * draws[5]
        d = 0.3 * draws[6]
        e = 0.3 * draws[7]
        f = Signal(grid, np.exp(-x ** 2 / (2 * sf ** 2)) * np.exp(1j * rate * x ** 2))
        g = Signal(grid, np.exp(-(x - 0.4 * draws[1]) ** 2 / (2 * sg ** 2)))
        phi = Window.from_signal(generate("gaussian", grid, sigma=0.45))
        out.append((f"r{k}", f, g, phi, make_params(a, b, c, d, e)))
    return out


def check_conv_sup_norm(scale: float = 1.0) -> list[DefectReport]:
    tf = _recon_tf()
    slack = _tol("convolution.sup_norm_bound", scale)
    reports = []
    for case in _identity_cases()[:6]:
        rep = conv.sup_norm_check(case.signal, case.window, case.params, 2.0, 2.0, tf)
        reports.append(DefectReport(f"convolution.sup_norm_bound/{case.label}", rep.max_abs_defect,
                                    rep.rel_defect, rep.grid_meta, rep.rel_defect <= slack, slack))
    return reports


def check_conv_spectral_norm(scale: float = 1.0) -> list[DefectReport]:
    grid = _surface_grid()
    slack = _tol("convolution.spectral_norm_bound", scale)
    reports = []
    for label, f, g, phi, lam in _inequality_corpus(4):
        v_half = 5.26 / (0.45 * abs(lam.b))
        rep = conv.spectral_norm_check(f, g, phi, lam, 2.0, 0.3,
                                       UniformGrid.symmetric(v_half, 65), grid)
        reports.append(DefectReport(f"convolution.spectral_norm_bound/{label}", rep.max_abs_defect,
                                    rep.rel_defect, rep.grid_meta, rep.rel_defect <= slack, slack))
    return reports


def check_conv_young(scale: float = 1.0) -> list[DefectReport]:
    grid = _surface_grid()
    tf = TfGrid(UniformGrid.symmetric(8.0, 65), UniformGrid.symmetric(12.0, 49))
    slack = _tol("convolution.young_bound", scale)
    reports = []
    for label, f, g, phi, lam in _inequality_corpus(3):
        v_half = 5.26 / (0.45 * abs(lam.b))
        v_grid = UniformGrid.symmetric(v_half, 65)
        for (p, q, r) in ((1.0, 1.0, 1.0), (2.0, 1.0, 2.0)):
            rep = conv.young_bound_check(f, g, phi, lam, p, q, r, 0.3, v_grid, grid, tf)
            reports.append(DefectReport(f"convolution.young_bound/{label}p{p:g}q{q:g}", rep.max_abs_defect,
                                        rep.rel_defect, rep.grid_meta, rep.rel_defect <= slack, slack))
    return reports


# ----------------------------------------------------------------------------
# solver checks


def _solver_setup():
    grid = _surface_grid()
    x = grid.points()
    phi = Window.from_signal(generate("gaussian", grid, sigma=1.0))
    lam = CORPUS_LAMBDAS[2]
    tf = TfGrid(UniformGrid.symmetric(16.0, 129), UniformGrid.symmetric(20.0, 193))
    nu0 = generate("gaussian", grid, sigma=1.0)
    h = Signal(grid, 1e-5 * np.exp(-x ** 2 / 2.0) * np.exp(1j * (0.4 * x ** 2 + 0.8 * x)))
    return grid, x, phi, lam, tf, nu0, h


def _manufacture(f0: Signal, h: Signal, phi: Window, lam: QpftParams, tau: complex,
                 tf: TfGrid) -> Signal:
    psi = slv.psi_field(h, phi, lam, tau, tf)
    target = wq.wqpft_forward(f0, phi, lam, tf, warn_dropped=False)
    return wq.wqpft_inverse(TfMap(tf, psi.values * target.values), phi, phi, lam, f0.grid)


def check_solver_degenerate(scale: float = 1.0) -> list[DefectReport]:
    grid, x, phi, lam, tf, nu0, _ = _solver_setup()
    zero = Signal(grid, np.zeros(grid.count))
    opts = slv.SolverOptions(tau=1.0, tf=tf)
    result = slv.solve(nu0, zero, phi, lam, opts, grid)
    tol = _tol("solver.degenerate_identity", scale)
    rep = _l2_report("solver.degenerate_identity", nu0, result.nu, tol,
                     f"{tf.describe()} residual={result.residual!r}")
    return [rep]


def check_solver_manufactured(scale: float = 1.0) -> list[DefectReport]:
    grid, x, phi, lam, tf, nu0, h = _solver_setup()
    f = _manufacture(nu0, h, phi, lam, 1.0, tf)
    opts = slv.SolverOptions(tau=1.0, tf=tf)
    result = slv.solve(f, h, phi, lam, opts, grid)
    rec_tol = _tol("solver.manufactured_recovery", scale)
    res_tol = _tol("solver.manufactured_residual", scale)
    reports = [
        _l2_report("solver.manufactured_recovery", nu0, result.nu, rec_tol,
                   f"{tf.describe()} min_psi={result.diagnostics.min_abs_psi!r}"),
        DefectReport("solver.manufactured_residual", result.residual, result.residual,
                     tf.describe(), result.residual <= res_tol, res_tol),
    ]
    return reports


def check_solver_tau_scaling(scale: float = 1.0) -> list[DefectReport]:
    grid, x, phi, lam, tf, nu0, h = _solver_setup()
    big_h = Signal(grid, 1e5 * h.samples)  # visible symbol variation
    f = _manufacture(nu0, big_h, phi, lam, 1.0, tf)
    r1 = slv.solve(f, big_h, phi, lam, slv.SolverOptions(tau=1.0, tf=tf), grid)
    s = 2.5 - 0.5j
    f_s = Signal(grid, s * f.samples)
    h_s = Signal(grid, s * big_h.samples)
    r2 = slv.solve(f_s, h_s, phi, lam, slv.SolverOptions(tau=s, tf=tf), grid)
    tol = _tol("solver.tau_scaling", scale)
    return [_l2_report("solver.tau_scaling", r1.nu, r2.nu, tol, tf.describe())]


def check_solver_two_mode(scale: float = 1.0) -> list[DefectReport]:
    grid, x, phi, lam, tf, nu0, h = _solver_setup()
    big_h = Signal(grid, 1e5 * h.samples)
    f = _manufacture(nu0, big_h, phi, lam, 1.0, tf)
    r_thresh = slv.solve(f, big_h, phi, lam, slv.SolverOptions(tau=1.0, tf=tf), grid)
    r_tikh = slv.solve(f, big_h, phi, lam,
                       slv.SolverOptions(tau=1.0, tf=tf, regularization="tikhonov", lam=1e-6), grid)
    tol = _tol("solver.two_mode_agreement", scale)
    return [_l2_report("solver.two_mode_agreement", r_thresh.nu, r_tikh.nu, tol, tf.describe())]


def check_solver_conditioning(scale: float = 1.0) -> list[DefectReport]:
    """Observed, not asserted: recovery degrades as the symbol approaches zero."""
    grid, x, phi, lam, tf, nu0, h = _solver_setup()
    big_h = Signal(grid, 2e5 * h.samples)
    errors = []
    for tau in (4.0, 2.0, 1.0):
        f = _manufacture(nu0, big_h, phi, lam, tau, tf)
        res = slv.solve(f, big_h, phi, lam, slv.SolverOptions(tau=tau, tf=tf), grid)
        err = signal_norm(Signal(grid, res.nu.samples - nu0.samples), 2) / signal_norm(nu0, 2)
        errors.append((tau, res.diagnostics.min_abs_psi, err))
    meta = " ".join(f"tau={t:g}:min_psi={m!r}:err={e!r}" for t, m, e in errors)
    tol = _tol("solver.conditioning_profile", scale)
    return [DefectReport("solver.conditioning_profile", errors[-1][2], errors[-1][2], meta, True, tol)]


# ----------------------------------------------------------------------------
# registry

CHECKS = {
    "qpft.gaussian_oracle": check_qpft_gaussian_oracle,
    "qpft.roundtrip": check_qpft_roundtrip,
    "qpft.parseval": check_qpft_parseval,
    "qpft.linearity": check_qpft_linearity,
    "qpft.convolution": check_qpft_convolution,
    "qpft.riemann_lebesgue": check_qpft_riemann_lebesgue,
    "qpft.chirp_norm_bound": check_qpft_chirp_norm_bound,
    "wqpft.row_equivalence": check_wqpft_row_equivalence,
    "wqpft.wft_reduction_exact": check_wqpft_wft_reduction_exact,
    "wqpft.identities": check_wqpft_identities,
    "wqpft.reconstruction": check_wqpft_reconstruction,
    "wqpft.rk": check_wqpft_rk,
    "wqpft.energy": check_wqpft_energy,
    "wqpft.riemann_lebesgue": check_wqpft_riemann_lebesgue,
    "wqpft.minkowski_bound": check_wqpft_minkowski,
    "wqpft.continuity_modulus": check_wqpft_continuity,
    "convolution.spectral_product_algebra": check_spectral_product_algebra,
    "convolution.spectral_consistency": check_spectral_consistency,
    "convolution.spatial_theorem": check_spatial_theorem,
    "convolution.sup_norm_bound": check_conv_sup_norm,
    "convolution.spectral_norm_bound": check_conv_spectral_norm,
    "convolution.young_bound": check_conv_young,
    "solver.degenerate": check_solver_degenerate,
    "solver.manufactured": check_solver_manufactured,
    "solver.tau_scaling": check_solver_tau_scaling,
    "solver.two_mode": check_solver_two_mode,
    "solver.conditioning": check_solver_conditioning,
}

SUITES = {
    "qpft": (
        "qpft.gaussian_oracle", "qpft.roundtrip", "qpft.parseval", "qpft.linearity",
        "qpft.convolution", "qpft.riemann_lebesgue", "qpft.chirp_norm_bound",
    ),
    "wqpft": (
        "wqpft.row_equivalence", "wqpft.wft_reduction_exact", "wqpft.identities",
        "wqpft.reconstruction", "wqpft.rk", "wqpft.energy", "wqpft.riemann_lebesgue",
        "wqpft.minkowski_bound", "wqpft.continuity_modulus",
    ),
    "convolution": (
        "convolution.spectral_product_algebra", "convolution.spectral_consistency",
        "convolution.spatial_theorem", "convolution.sup_norm_bound",
        "convolution.spectral_norm_bound", "convolution.young_bound",
    ),
    "solver": (
        "solver.degenerate", "solver.manufactured", "solver.tau_scaling",
        "solver.two_mode", "solver.conditioning",
    ),
}
SUITES["all"] = SUITES["qpft"] + SUITES["wqpft"] + SUITES["convolution"] + SUITES["solver"]


def run_suite(name: str, tol_scale: float = 1.0) -> list[DefectReport]:
    """Execute one named suite; returns its reports in a deterministic order."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    reports = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResolutionWarning)
        for check_name in SUITES[name]:
            reports.extend(CHECKS[check_name](tol_scale))
    return reports


def render_report(reports: list[DefectReport]) -> str:
    """Line-oriented key=value rendering, one identity per blank-line block."""
    blocks = []
    for rep in reports:
        blocks.append("\n".join([
            f"name={rep.identity_name}",
            f"max_abs_defect={rep.max_abs_defect!r}",
            f"rel_defect={rep.rel_defect!r}",
            f"tolerance={rep.tolerance!r}",
            f"pass={'true' if rep.passed else 'false'}",
            f"grid={rep.grid_meta}",
        ]))
    return "\n\n".join(blocks) + "\n"

"""Windowed quadratic-phase transform surface and its identity checkers.

The windowed transform of f against window phi is the position integral of
f(x) * conj(phi(x - u)) * K(w, x) over the signal grid, yielding a complex
surface over window centers u and frequencies w. Window shifts are evaluated
on the common sample lattice (no interpolation), so every identity check below
compares two quadratures of identical point sets and measures only the
identity defect, not interpolation error.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .core import (
    DefectReport,
    QpftParams,
    Signal,
    TfGrid,
    TfMap,
    UniformGrid,
    Window,
    defect_report,
    inequality_report,
    inner_product,
    signal_norm,
    trapezoid_weights,
)
from .qpft import forward_scale, inverse_scale, kernel_matrix, qpft_forward, Spectrum
from .quadrature import warn_if_unresolved

__all__ = [
    "wqpft_forward",
    "wqpft_via_qpft",
    "wqpft_row",
    "wqpft_inverse",
    "wft_row",
    "reproducing_kernel",
    "rk_project",
    "identity_defect",
    "IDENTITY_VARIANTS",
    "continuity_modulus",
    "energy_defect",
    "minkowski_bound_check",
]

IDENTITY_VARIANTS = (
    "linearity",
    "window_conjugate_linearity",
    "time_shift",
    "modulation",
    "conjugation",
    "parity",
    "switching",
    "time_marginal",
    "wft_reduction",
)


def _lattice_shift(f_grid: UniformGrid, w_grid: UniformGrid, u: float) -> int:
    """Integer j such that x_n - u lands on window sample n + j."""
    off = (f_grid.start - u - w_grid.start) / f_grid.step
    j = round(off)
    if abs(off - j) > 1e-9:
        raise ValueError("incompatible steps: window center off the sample lattice")
    return int(j)


def shifted_window(phi: Window, f_grid: UniformGrid, u: float,
                   warn_dropped: bool = False) -> np.ndarray:
    """Samples of phi(x - u) on f_grid, zero outside the window span."""
    if abs(phi.grid.step - f_grid.step) > 1e-12 * f_grid.step:
        raise ValueError("incompatible steps between signal and window grids")
    j = _lattice_shift(f_grid, phi.grid, u)
    n = f_grid.count
    out = np.zeros(n, dtype=np.complex128)
    lo = max(0, -j)
    hi = min(n, phi.grid.count - j)
    if hi > lo:
        out[lo:hi] = phi.samples[lo + j:hi + j]
    if warn_dropped:
        kept = float(np.sum(np.abs(out) ** 2)) * f_grid.step
        total = phi.l2_norm ** 2
        if total - kept > 1e-10 * total:
            warnings.warn(
                f"window mass {total - kept:.3g} dropped outside the signal span at u={u:g}",
                UserWarning,
                stacklevel=3,
            )
    return out


def reflect_signal(f: Signal) -> Signal:
    """Samples of f(-x); requires a grid symmetric about 0."""
    if not f.grid.is_symmetric():
        raise ValueError("reflection requires a grid symmetric about 0")
    return Signal(f.grid, f.samples[::-1])


def shift_signal(f: Signal, k: float) -> Signal:
    """Samples of f(x - k) with zero fill; k must sit on the step lattice."""
    r = round(k / f.grid.step)
    if abs(k / f.grid.step - r) > 1e-9:
        raise ValueError("shift must be an integer multiple of the grid step")
    out = np.zeros(f.grid.count, dtype=np.complex128)
    r = int(r)
    if r >= 0:
        out[r:] = f.samples[:f.grid.count - r]
    else:
        out[:r] = f.samples[-r:]
    return Signal(f.grid, out)


def wqpft_row(f: Signal, phi: Window, lam: QpftParams, u: float, w_values,
              inverse_kernel: bool = False) -> np.ndarray:
    """Windowed transform at one center u and an arbitrary frequency vector.

    Frequencies need not lie on any grid; the kernel is evaluated directly.
    With inverse_kernel=True the conjugate-phase kernel sqrt(b i/2 pi)
    exp(-i(...)) is used (the negated-parameter transform).
    """
    w = np.asarray(w_values, dtype=np.float64)
    x = f.grid.points()
    a, b, c, d, e = lam.astuple()
    weights = trapezoid_weights(f.grid.count) * f.grid.step
    integrand = f.samples * np.conj(shifted_window(phi, f.grid, u)) * weights
    x_phase = np.exp(1j * (a * x ** 2 + d * x))
    w_phase = np.exp(1j * (c * w ** 2 + e * w))
    cross = np.exp(1j * b * np.outer(w, x))
    if inverse_kernel:
        mat = inverse_scale(b) * np.conj(x_phase)[None, :] * np.conj(cross) * np.conj(w_phase)[:, None]
    else:
        mat = forward_scale(b) * x_phase[None, :] * cross * w_phase[:, None]
    return mat @ integrand


def wqpft_forward(f: Signal, phi: Window, lam: QpftParams, tf: TfGrid,
                  inverse_kernel: bool = False, warn_dropped: bool = True) -> TfMap:
    """Windowed transform surface over the full (u, w) grid."""
    warn_if_unresolved(lam, f.grid, max(abs(tf.w_grid.start), abs(tf.w_grid.stop)))
    weights = trapezoid_weights(f.grid.count) * f.grid.step
    u_pts = tf.u_grid.points()
    base = f.samples * weights
    rows = np.empty((tf.u_grid.count, f.grid.count), dtype=np.complex128)
    for i, u in enumerate(u_pts):
        rows[i] = base * np.conj(shifted_window(phi, f.grid, u, warn_dropped=warn_dropped and i == 0))
    mat = kernel_matrix(lam, tf.w_grid, f.grid)
    if inverse_kernel:
        # the conjugate-phase kernel is exactly the conjugate of the forward one
        values = rows @ np.conj(mat).T
    else:
        values = rows @ mat.T
    return TfMap(tf, values)


def wqpft_via_qpft(f: Signal, phi: Window, lam: QpftParams, u: float,
                   w_grid: UniformGrid) -> Spectrum:
    """Windowed transform row computed as the plain transform of f * conj(T_u phi)."""
    product = Signal(f.grid, f.samples * np.conj(shifted_window(phi, f.grid, u)))
    return qpft_forward(product, lam, w_grid)


def wft_row(f: Signal, phi: Window, u: float, beta_values) -> np.ndarray:
    """Plain windowed Fourier transform (kernel e^{+i beta x}) at one center."""
    beta = np.asarray(beta_values, dtype=np.float64)
    x = f.grid.points()
    weights = trapezoid_weights(f.grid.count) * f.grid.step
    integrand = f.samples * np.conj(shifted_window(phi, f.grid, u)) * weights
    return np.exp(1j * np.outer(beta, x)) @ integrand


def wqpft_inverse(tfmap: TfMap, phi: Window, psi: Window, lam: QpftParams,
                  x_grid: UniformGrid) -> Signal:
    """Reconstruction: (1/<phi, psi>) double integral of M(u, w) K_inv(x, w) psi(x - u).

    Any window pair with non-negligible overlap works; with psi = phi the
    prefactor reduces to 1/||phi||^2.
    """
    ip = inner_product(phi.signal, psi.signal)
    if abs(ip) <= 1e-12:
        raise ValueError("non-invertible window pair: <phi, psi> vanishes")
    tf = tfmap.tf_grid
    ww = trapezoid_weights(tf.w_grid.count) * tf.w_grid.step
    wu = trapezoid_weights(tf.u_grid.count) * tf.u_grid.step
    # inner frequency integral per center: rows over u, columns over x
    kmat = kernel_matrix(lam, tf.w_grid, x_grid)
    partial = (tfmap.values * ww[None, :]) @ np.conj(kmat)
    out = np.zeros(x_grid.count, dtype=np.complex128)
    for i, u in enumerate(tf.u_grid.points()):
        out += wu[i] * shifted_window(psi, x_grid, u) * partial[i]
    return Signal(x_grid, out / ip)


def reproducing_kernel(lam: QpftParams, phi: Window, u0: float, w0: float,
                       u: float, w: float) -> complex:
    """Kernel value tying the surface at (u, w) to the point (u0, w0).

    Position integral of conj(K(w, x)) phi(x - u) conj(phi(x - u0)) K(w0, x)
    over the window's own grid.
    """
    x = phi.grid.points()
    a, b, c, d, e = lam.astuple()
    weights = trapezoid_weights(phi.grid.count) * phi.grid.step
    sh_u = shifted_window(phi, phi.grid, u)
    sh_u0 = shifted_window(phi, phi.grid, u0)
    phase = np.exp(1j * (b * x * (w0 - w) + c * (w0 ** 2 - w ** 2) + e * (w0 - w)))
    scale = abs(forward_scale(b)) ** 2
    return complex(scale * np.sum(sh_u * np.conj(sh_u0) * phase * weights))


def rk_project(tfmap: TfMap, phi: Window, lam: QpftParams) -> TfMap:
    """Apply the reproducing-kernel integral operator to a surface.

    Evaluated with the position integral performed last (the finite sums
    commute), i.e. reconstruct with phi and transform again; fixed points are
    exactly the discretized transform range.
    """
    recon = wqpft_inverse(tfmap, phi, phi, lam, phi.grid)
    return wqpft_forward(recon, phi, lam, tfmap.tf_grid, warn_dropped=False)


def _tf_matrix(f: Signal, phi: Window, lam: QpftParams, tf: TfGrid,
               inverse_kernel: bool = False) -> np.ndarray:
    return wqpft_forward(f, phi, lam, tf, inverse_kernel=inverse_kernel,
                         warn_dropped=False).values


def _row_matrix(f: Signal, phi: Window, lam: QpftParams, u_values, w_values,
                inverse_kernel: bool = False) -> np.ndarray:
    """Surface at arbitrary centers/frequency vectors, one quadrature per row."""
    out = np.empty((len(u_values), np.shape(w_values)[-1]), dtype=np.complex128)
    for i, u in enumerate(u_values):
        wv = w_values[i] if np.ndim(w_values) == 2 else w_values
        out[i] = wqpft_row(f, phi, lam, float(u), wv, inverse_kernel=inverse_kernel)
    return out


def identity_defect(name: str, f: Signal, phi: Window, lam: QpftParams, tf: TfGrid,
                    *, f2: Signal | None = None, psi: Window | None = None,
                    m: complex = 2.0, n: complex = -1.5j, shift: float = 0.5,
                    alpha: float = 0.75, tolerance: float = 1e-4) -> DefectReport:
    """Evaluate one algebraic identity of the windowed transform as LHS vs RHS.

    Variants: linearity, window_conjugate_linearity, time_shift (parameter
    `shift`), modulation (parameter `alpha`), conjugation, parity, switching,
    time_marginal, wft_reduction. Both sides are quadratures over the same
    lattice, so the reported defect isolates the identity itself.
    """
    if name not in IDENTITY_VARIANTS:
        raise ValueError(f"unknown identity variant {name!r}")
    a, b, c, d, e = lam.astuple()
    u = tf.u_grid.points()
    w = tf.w_grid.points()
    x = f.grid.points()
    meta = f"x{f.grid.describe()} {tf.describe()}"

    if name == "linearity":
        g = f2 if f2 is not None else Signal(f.grid, np.exp(-(x - 0.4) ** 2))
        combo = Signal(f.grid, m * f.samples + n * g.samples)
        lhs = _tf_matrix(combo, phi, lam, tf)
        rhs = m * _tf_matrix(f, phi, lam, tf) + n * _tf_matrix(g, phi, lam, tf)

    elif name == "window_conjugate_linearity":
        second = psi if psi is not None else Window.from_signal(
            Signal(phi.grid, np.exp(-(phi.grid.points()) ** 2)))
        combo = Window.from_signal(
            Signal(phi.grid, m * phi.samples + n * second.samples))
        lhs = _tf_matrix(f, combo, lam, tf)
        rhs = np.conj(m) * _tf_matrix(f, phi, lam, tf) + np.conj(n) * _tf_matrix(f, second, lam, tf)

    elif name == "time_shift":
        k = shift
        lhs = _tf_matrix(shift_signal(f, k), phi, lam, tf)
        tilted = Signal(f.grid, np.exp(2j * a * x * k) * f.samples)
        base = _row_matrix(tilted, phi, lam, u - k, w)
        rhs = np.exp(1j * (a * k ** 2 + b * k * w + d * k))[None, :] * base

    elif name == "modulation":
        mod = Signal(f.grid, np.exp(1j * alpha * x) * f.samples)
        lhs = _tf_matrix(mod, phi, lam, tf)
        phase = np.exp(-1j / b ** 2 * (2 * b * c * alpha * w + c * alpha ** 2 + b * e * alpha))
        rhs = phase[None, :] * _row_matrix(f, phi, lam, u, w + alpha / b)

    elif name == "conjugation":
        conj_phi = Window.from_signal(Signal(phi.grid, np.conj(phi.samples)))
        conj_f = Signal(f.grid, np.conj(f.samples))
        lhs = _tf_matrix(conj_f, conj_phi, lam, tf)
        rhs = np.conj(_tf_matrix(f, phi, lam, tf, inverse_kernel=True))

    elif name == "parity":
        pf = reflect_signal(f)
        pphi = Window.from_signal(reflect_signal(phi.signal))
        lhs = _tf_matrix(pf, pphi, lam, tf)
        tilted = Signal(f.grid, np.exp(-2j * d * x) * f.samples)
        base = _row_matrix(tilted, phi, lam, -u, -w)
        rhs = np.exp(2j * e * w)[None, :] * base

    elif name == "switching":
        lhs = _tf_matrix(f, phi, lam, tf)
        f_window = Window.from_signal(f)
        freq = w[None, :] + (2.0 * a / b) * u[:, None]
        base = _row_matrix(phi.signal, f_window, lam, -u, freq, inverse_kernel=True)
        phase = np.exp(1j * ((a - 4 * c * a ** 2 / b ** 2) * u[:, None] ** 2
                             + (b - 4 * c * a / b) * u[:, None] * w[None, :]
                             + (d - 2 * a * e / b) * u[:, None]))
        rhs = phase * np.conj(base)

    elif name == "time_marginal":
        surface = _tf_matrix(f, phi, lam, tf)
        wu = trapezoid_weights(tf.u_grid.count) * tf.u_grid.step
        lhs = wu @ surface
        wx = trapezoid_weights(phi.grid.count) * phi.grid.step
        const = complex(np.sum(np.conj(phi.samples) * wx))
        rhs = const * qpft_forward(f, lam, tf.w_grid).values

    else:  # wft_reduction
        lhs = _tf_matrix(f, phi, lam, tf)
        tilted = Signal(f.grid, forward_scale(b) * np.exp(1j * (a * x ** 2 + d * x)) * f.samples)
        rows = np.empty_like(lhs)
        for i, uc in enumerate(u):
            rows[i] = wft_row(tilted, phi, float(uc), b * w)
        rhs = np.exp(1j * (c * w ** 2 + e * w))[None, :] * rows

    return defect_report(name, lhs, rhs, tolerance, meta)


def continuity_modulus(f: Signal, phi: Window, lam: QpftParams, tf: TfGrid,
                       du: float, dw: float) -> float:
    """Max |Q(u + du, w + dw) - Q(u, w)| over the grid overlap.

    du and dw must be integer multiples of the respective grid steps.
    """
    ru = round(du / tf.u_grid.step)
    rw = round(dw / tf.w_grid.step)
    if abs(du / tf.u_grid.step - ru) > 1e-9 or abs(dw / tf.w_grid.step - rw) > 1e-9:
        raise ValueError("offsets must be integer multiples of the grid steps")
    surface = _tf_matrix(f, phi, lam, tf)
    ru, rw = int(ru), int(rw)
    if ru == 0 and rw == 0:
        return 0.0
    nu, nw = surface.shape
    base = surface[:nu - ru if ru else nu, :nw - rw if rw else nw]
    moved = surface[ru:, rw:]
    return float(np.max(np.abs(moved - base)))


def energy_defect(f: Signal, g: Signal, phi: Window, psi: Window, lam: QpftParams,
                  tf: TfGrid, tolerance: float = 1e-3) -> DefectReport:
    """Surface inner product vs <f, g> * conj(<phi, psi>).

    The conjugated window pairing is what the orthogonality relation actually
    produces; the unconjugated pairing is recorded alongside for reference
    (the two agree for real window pairs).
    """
    qf = _tf_matrix(f, phi, lam, tf)
    qg = _tf_matrix(g, psi, lam, tf)
    wu = trapezoid_weights(tf.u_grid.count) * tf.u_grid.step
    ww = trapezoid_weights(tf.w_grid.count) * tf.w_grid.step
    lhs = complex(np.sum((qf * np.conj(qg)) * np.outer(wu, ww)))
    ip_fg = inner_product(f, g)
    ip_wp = inner_product(phi.signal, psi.signal)
    rhs = ip_fg * np.conj(ip_wp)
    alt = ip_fg * ip_wp
    meta = f"{tf.describe()} unconjugated_rhs={alt!r}"
    return defect_report("energy", np.array([lhs]), np.array([rhs]), tolerance, meta)


def minkowski_bound_check(f: Signal, phi: Window, lam: QpftParams, p,
                          tf: TfGrid) -> DefectReport:
    """Check max_w ||Q(., w)||_p <= sqrt(|b|/2pi) ||f||_1 ||phi||_p."""
    surface = np.abs(_tf_matrix(f, phi, lam, tf))
    if p == math.inf or p == np.inf:
        lhs = float(surface.max())
        phi_norm = float(np.max(np.abs(phi.samples)))
    else:
        p = float(p)
        if p < 1.0:
            raise ValueError("p must be >= 1 or infinity")
        wu = trapezoid_weights(tf.u_grid.count) * tf.u_grid.step
        lhs = float(np.max((wu @ surface ** p) ** (1.0 / p)))
        phi_norm = signal_norm(phi.signal, p)
    rhs = math.sqrt(abs(lam.b) / (2.0 * math.pi)) * signal_norm(f, 1) * phi_norm
    return inequality_report("minkowski_bound", lhs, rhs, f"p={p!r} {tf.describe()}")

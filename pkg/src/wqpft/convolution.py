"""Convolution layer of the windowed transform.

Two operations live here. The spectral convolution of f and g is the signal
whose windowed transform is the pointwise product of the two factor
transforms; it is recovered by dividing that product row (at one fixed
transform-side frequency) by the window's chirped spectrum in a dual
frequency variable and inverting. The spatial theorem expresses the windowed
transform of a double-rate chirp convolution of signals, analyzed with a
chirp convolution of windows, as a single frequency-shifted cross integral of
the factor transforms.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    DefectReport,
    QpftParams,
    Signal,
    TfGrid,
    TfMap,
    UniformGrid,
    Window,
    inequality_report,
    signal_norm,
    trapezoid_weights,
)
from .qpft import chirp_convolve, forward_scale, kernel_matrix
from .windowed import shifted_window, wqpft_forward, wqpft_row

__all__ = [
    "spectral_product",
    "window_chirp_spectrum",
    "spectral_convolve",
    "spatial_lhs",
    "spatial_rhs",
    "spectral_norm_check",
    "young_bound_check",
    "sup_norm_check",
    "EPS_DIV_RATIO",
]

# Division floor for the window-spectrum denominator, relative to its peak.
EPS_DIV_RATIO = 1e-8


def spectral_product(f: Signal, g: Signal, phi: Window, lam: QpftParams,
                     tf: TfGrid) -> TfMap:
    """Pointwise product of the two windowed transforms on a shared grid."""
    qf = wqpft_forward(f, phi, lam, tf, warn_dropped=False)
    qg = wqpft_forward(g, phi, lam, tf, warn_dropped=False)
    return TfMap(tf, qf.values * qg.values)


def window_chirp_spectrum(phi: Window, lam: QpftParams, v_grid: UniformGrid) -> np.ndarray:
    """Transform of conj(phi(-s)) e^{-i(a s^2 + d s)} over the dual frequency grid.

    This is the center-independent part of the chirped window spectrum: the
    full spectrum at center u is this vector times e^{i(a u^2 + d u)}, a
    unimodular factor that cancels inside the spectral-convolution integral.
    Requires a window grid symmetric about 0.
    """
    if not phi.grid.is_symmetric():
        raise ValueError("window grid must be symmetric about 0")
    a, b, c, d, e = lam.astuple()
    s = phi.grid.points()
    base = np.conj(phi.samples[::-1]) * np.exp(-1j * (a * s ** 2 + d * s))
    weights = trapezoid_weights(phi.grid.count) * phi.grid.step
    mat = kernel_matrix(lam, v_grid, phi.grid)
    return mat @ (base * weights)


def spectral_convolve(f: Signal, g: Signal, phi: Window, lam: QpftParams,
                      omega: float, v_grid: UniformGrid, x_grid: UniformGrid) -> Signal:
    """Signal whose windowed transform row at the given frequency is Qf * Qg.

    Construction: form the product row S(u) = Q[f](u, omega) Q[g](u, omega)
    over centers u on x_grid, pass to a dual variable v against e^{i b u v},
    divide by the window's chirped spectrum, and invert back to x. The chirp
    bookkeeping between the u-side kernel and the center-dependent window
    spectrum cancels, leaving

      out(x) = |b|/(2 pi) e^{-i(a x^2 + b x w + c w^2 + d x + e w)}
               * int dv e^{-i b x v} e^{i(c v^2 + e v)} U(v) / W(v),
      U(v) = int du e^{i b u v} S(u),   W = window_chirp_spectrum.

    The divisor W must stay above EPS_DIV_RATIO * max|W| on the whole v grid;
    choose the v span from where the window spectrum is appreciable.
    """
    if f.grid != g.grid or f.grid != phi.grid:
        raise ValueError("grid mismatch: f, g, and the window must share a grid")
    a, b, c, d, e = lam.astuple()
    u = x_grid.points()
    wu = trapezoid_weights(x_grid.count) * x_grid.step
    omega = float(omega)
    freq = np.array([omega])
    row_f = np.array([wqpft_row(f, phi, lam, float(uc), freq)[0] for uc in u])
    row_g = np.array([wqpft_row(g, phi, lam, float(uc), freq)[0] for uc in u])
    product = row_f * row_g

    W = window_chirp_spectrum(phi, lam, v_grid)
    floor = EPS_DIV_RATIO * float(np.max(np.abs(W)))
    if float(np.min(np.abs(W))) <= floor:
        raise ValueError("window spectrum vanishes on the dual-frequency grid")

    v = v_grid.points()
    wv = trapezoid_weights(v_grid.count) * v_grid.step
    U = np.exp(1j * b * np.outer(v, u)) @ (product * wu)
    quotient = np.exp(1j * (c * v ** 2 + e * v)) * U / W
    x = x_grid.points()
    outer_phase = np.exp(-1j * (a * x ** 2 + b * x * omega + c * omega ** 2 + d * x + e * omega))
    vals = (abs(b) / (2.0 * np.pi)) * outer_phase * (np.exp(-1j * b * np.outer(x, v)) @ (quotient * wv))
    return Signal(x_grid, vals)


def spatial_lhs(f: Signal, g: Signal, phi: Window, psi: Window, lam: QpftParams,
                tf: TfGrid) -> TfMap:
    """Windowed transform of the rate-2a convolution under the rate-a window pair."""
    composite_window = Window.from_signal(chirp_convolve(phi.signal, psi.signal, lam.a, lam.b))
    composite_signal = chirp_convolve(f, g, 2.0 * lam.a, lam.b)
    return wqpft_forward(composite_signal, composite_window, lam, tf, warn_dropped=False)


def spatial_rhs(f: Signal, g: Signal, phi: Window, psi: Window, lam: QpftParams,
                tf: TfGrid, m_grid: UniformGrid) -> TfMap:
    """Cross integral of the factor transforms matching spatial_lhs.

    For each (u, w):

      E(u, w) * int dm Q_phi[f](center m, freq m0) Q_psi[g](center u-m, freq m1)
                      * e^{i (2a + 8 a^2 c / b^2)(u m - m^2)},
      m0 = w - (2a/b) u + (2a/b) m,   m1 = w - (2a/b) m,
      E(u, w) = conj(sqrt(b/(2 pi i)))
                * e^{i(-(4 a^2 c / b^2) u^2 + (4 a c / b) u w + (2 a e / b) u
                      - c w^2 - e w)}.

    Factor transforms are evaluated by direct quadrature at the continuous
    frequencies m0, m1 (no surface interpolation). The u*m chirp coefficient
    and the constant in E are pinned by the a = 0 reduction and cross-checked
    numerically against spatial_lhs.
    """
    if f.grid != g.grid:
        raise ValueError("grid mismatch")
    a, b, c, d, e = lam.astuple()
    x = f.grid.points()
    m = m_grid.points()
    wm = trapezoid_weights(m_grid.count) * m_grid.step
    wx = trapezoid_weights(f.grid.count) * f.grid.step
    alpha = 2.0 * a / b
    scale = forward_scale(b)
    chirp_coeff = 2.0 * a + 8.0 * a ** 2 * c / b ** 2

    # Split e^{i b x m0} = e^{i b x (w - alpha u)} * e^{i 2 a x m} and
    # e^{i b x m1} = e^{i b x w} * e^{-i 2 a x m}: the m-coupled chirps join the
    # precomputed integrand matrices, the rest is one matvec per center.
    base_f = f.samples * np.exp(1j * (a * x ** 2 + d * x)) * wx
    base_g = g.samples * np.exp(1j * (a * x ** 2 + d * x)) * wx
    mat_f = np.empty((m_grid.count, f.grid.count), dtype=np.complex128)
    for j, mj in enumerate(m):
        mat_f[j] = base_f * np.conj(shifted_window(phi, f.grid, float(mj))) * np.exp(2j * a * x * mj)

    u_pts = tf.u_grid.points()
    w_pts = tf.w_grid.points()
    m1 = w_pts[None, :] - alpha * m[:, None]
    phase_g = scale * np.exp(1j * (c * m1 ** 2 + e * m1))
    cross_g = np.exp(1j * b * np.outer(x, w_pts))
    values = np.empty((tf.u_grid.count, tf.w_grid.count), dtype=np.complex128)
    for i, u in enumerate(u_pts):
        mat_g = np.empty_like(mat_f)
        for j, mj in enumerate(m):
            mat_g[j] = base_g * np.conj(shifted_window(psi, f.grid, float(u - mj))) * np.exp(-2j * a * x * mj)
        m0 = w_pts[None, :] - alpha * u + alpha * m[:, None]
        phase_f = scale * np.exp(1j * (c * m0 ** 2 + e * m0))
        cross_f = np.exp(1j * b * np.outer(x, w_pts - alpha * u))
        qf = phase_f * (mat_f @ cross_f)
        qg = phase_g * (mat_g @ cross_g)
        chirp = (np.exp(1j * chirp_coeff * (u * m - m ** 2)) * wm)[:, None]
        env = np.conj(scale) * np.exp(1j * (-(4 * a ** 2 * c / b ** 2) * u ** 2
                                            + (4 * a * c / b) * u * w_pts
                                            + (2 * a * e / b) * u
                                            - c * w_pts ** 2 - e * w_pts))
        values[i] = env * np.sum(qf * qg * chirp, axis=0)
    return TfMap(tf, values)


def _u_axis_norm(surface: np.ndarray, u_grid: UniformGrid, p) -> float:
    """max over frequency columns of the step-weighted u-axis p-norm."""
    mags = np.abs(surface)
    if p == math.inf or p == np.inf:
        return float(mags.max())
    p = float(p)
    wu = trapezoid_weights(u_grid.count) * u_grid.step
    return float(np.max((wu @ mags ** p) ** (1.0 / p)))


def spectral_norm_check(f: Signal, g: Signal, phi: Window, lam: QpftParams, p,
                        omega: float, v_grid: UniformGrid, x_grid: UniformGrid) -> DefectReport:
    """Check ||f (.) g||_p <= sqrt(2 pi/|b|) ||f||_p ||g||_p ||phi||_q, 1/p + 1/q = 1."""
    p = float(p)
    if p <= 1.0:
        raise ValueError("need p > 1 with a finite conjugate exponent")
    q = p / (p - 1.0)
    conv = spectral_convolve(f, g, phi, lam, omega, v_grid, x_grid)
    lhs = signal_norm(conv, p)
    rhs = math.sqrt(2.0 * math.pi / abs(lam.b)) * signal_norm(f, p) * signal_norm(g, p) * signal_norm(phi.signal, q)
    return inequality_report("spectral_norm_bound", lhs, rhs, f"p={p:g} x{x_grid.describe()}")


def young_bound_check(f: Signal, g: Signal, phi: Window, lam: QpftParams,
                      p: float, q: float, r: float, omega: float,
                      v_grid: UniformGrid, x_grid: UniformGrid, tf: TfGrid) -> DefectReport:
    """Check max_w ||Q[f (.) g](., w)||_r <= sqrt(|b|) ||f||_p ||g||_q ||phi||_q^2.

    Exponents must satisfy 1/r = 1/p + 1/q - 1. The constant uses |b| so the
    bound stays meaningful for negative frequency scales.
    """
    if abs(1.0 / p + 1.0 / q - 1.0 - 1.0 / r) > 1e-12:
        raise ValueError("invalid exponent triple: need 1/r = 1/p + 1/q - 1")
    conv = spectral_convolve(f, g, phi, lam, omega, v_grid, x_grid)
    conv_on_phi_grid = Signal(phi.grid, conv.samples) if conv.grid == phi.grid else conv
    surface = wqpft_forward(conv_on_phi_grid, phi, lam, tf, warn_dropped=False).values
    lhs = _u_axis_norm(surface, tf.u_grid, r)
    rhs = math.sqrt(abs(lam.b)) * signal_norm(f, p) * signal_norm(g, q) * signal_norm(phi.signal, q) ** 2
    return inequality_report("young_bound", lhs, rhs, f"p={p:g} q={q:g} r={r:g} {tf.describe()}")


def sup_norm_check(f: Signal, phi: Window, lam: QpftParams, p, q,
                   tf: TfGrid) -> DefectReport:
    """Check max |Q| <= sqrt(|b|/2 pi) ||f||_p ||phi||_q for conjugate (p, q)."""
    if not (p == math.inf or q == math.inf):
        if abs(1.0 / float(p) + 1.0 / float(q) - 1.0) > 1e-12:
            raise ValueError("exponents must be conjugate")
    surface = wqpft_forward(f, phi, lam, tf, warn_dropped=False).values
    lhs = float(np.max(np.abs(surface)))
    rhs = math.sqrt(abs(lam.b) / (2.0 * math.pi)) * signal_norm(f, p) * signal_norm(phi.signal, q)
    return inequality_report("sup_norm_bound", lhs, rhs, f"p={p!r} q={q!r} {tf.describe()}")

"""Oscillatory-integral quadrature engine and closed-form reference values."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import QpftParams, UniformGrid, trapezoid_weights

__all__ = [
    "QuadratureSpec",
    "ResolutionWarning",
    "NyquistReport",
    "integrate",
    "nyquist_check",
    "oracle_qpft_gaussian",
]


class ResolutionWarning(UserWarning):
    """Kernel oscillation is close to or beyond the sampling limit."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite rule selection plus the oversampling factor reference runs use."""

    rule: str = "trapezoid"
    refinement_factor: int = 1

    def __post_init__(self):
        if self.rule not in ("trapezoid", "simpson"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if int(self.refinement_factor) != self.refinement_factor or self.refinement_factor < 1:
            raise ValueError("refinement_factor must be an integer >= 1")


def integrate(samples, step: float, spec: QuadratureSpec = QuadratureSpec()) -> complex:
    """Composite-rule approximation of the integral over the sample span."""
    arr = np.asarray(samples, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] < 2:
        raise ValueError("need at least 2 samples")
    if step <= 0 or not math.isfinite(step):
        raise ValueError("step must be positive and finite")
    n = arr.shape[0]
    if spec.rule == "trapezoid":
        w = trapezoid_weights(n)
    else:
        if n % 2 == 0:
            raise ValueError("simpson rule requires an odd sample count")
        w = np.ones(n)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w /= 3.0
    return complex(np.sum(arr * w) * step)


@dataclass(frozen=True)
class NyquistReport:
    max_phase_step: float
    ok: bool


def nyquist_check(lam: QpftParams, x_grid: UniformGrid, w_max: float) -> NyquistReport:
    """Bound the kernel phase advance per grid step over |w| <= w_max.

    The phase derivative in x is 2a*x + b*w + d; the worst advance per step
    controls how well the trapezoid sum tracks the continuum integral. The
    pass threshold pi/4 is deliberately conservative; exceeding it degrades
    fidelity to the continuum transform, not the internal consistency of the
    discrete one.
    """
    x = x_grid.points()
    w_max = abs(float(w_max))
    rate_hi = np.abs(2.0 * lam.a * x + lam.b * w_max + lam.d)
    rate_lo = np.abs(2.0 * lam.a * x - lam.b * w_max + lam.d)
    max_step = float(np.max(np.maximum(rate_hi, rate_lo)) * x_grid.step)
    return NyquistReport(max_step, max_step <= math.pi / 4.0)


def warn_if_unresolved(lam: QpftParams, x_grid: UniformGrid, w_max: float) -> None:
    report = nyquist_check(lam, x_grid, w_max)
    if not report.ok:
        warnings.warn(
            f"kernel phase advances {report.max_phase_step:.3g} rad per step "
            f"(> pi/4); results track the discrete sum, not the continuum integral",
            ResolutionWarning,
            stacklevel=3,
        )


def oracle_qpft_gaussian(p: float, lam: QpftParams, w) -> complex:
    """Closed-form quadratic-phase transform of exp(-p x^2), p > 0.

    sqrt(b/(2 pi i)) * exp(i(c w^2 + e w)) * sqrt(pi/(p - i a))
    * exp(-(b w + d)^2 / (4 (p - i a))), principal square roots throughout.
    """
    if not (p > 0.0) or not math.isfinite(p):
        raise ValueError("p must be positive")
    w = np.asarray(w, dtype=np.float64)
    a, b, c, d, e = lam.astuple()
    scale = np.sqrt(b / (2j * np.pi)) * np.sqrt(np.pi / (p - 1j * a))
    vals = scale * np.exp(1j * (c * w ** 2 + e * w)) * np.exp(-((b * w + d) ** 2) / (4.0 * (p - 1j * a)))
    if vals.ndim == 0:
        return complex(vals)
    return vals

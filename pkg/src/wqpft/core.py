"""Shared domain types: parameter sets, grids, signals, windows, TF maps.

Everything here is immutable after construction (frozen dataclasses; numpy
buffers are marked read-only), so instances can be shared freely across
parallel workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "QpftParams",
    "UniformGrid",
    "Signal",
    "Window",
    "TfGrid",
    "TfMap",
    "DefectReport",
    "make_params",
    "neg_params",
    "signal_norm",
    "inner_product",
    "trapezoid_weights",
    "defect_report",
    "inequality_report",
]

# Two sides both below this magnitude count as "vanishing" in defect reports.
VANISH_FLOOR = 1e-14


@dataclass(frozen=True)
class QpftParams:
    """Parameter 5-tuple (a, b, c, d, e) of the quadratic-phase kernel, b != 0.

    a: input chirp rate, b: frequency scale, c: output chirp rate,
    d: linear phase in position, e: linear phase in frequency.
    """

    a: float
    b: float
    c: float
    d: float
    e: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d, self.e)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("parameters must be finite")
        if self.b == 0.0:
            raise ValueError("degenerate parameter set: b must be nonzero")

    def neg(self) -> "QpftParams":
        """Inverse-transform ordering (-c, -b, -a, -e, -d)."""
        return QpftParams(-self.c, -self.b, -self.a, -self.e, -self.d)

    def astuple(self) -> tuple[float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e)


def make_params(a: float, b: float, c: float, d: float, e: float) -> QpftParams:
    return QpftParams(float(a), float(b), float(c), float(d), float(e))


def neg_params(lam: QpftParams) -> QpftParams:
    return lam.neg()


@dataclass(frozen=True)
class UniformGrid:
    """Uniform 1-D grid: point(i) = start + i*step for 0 <= i < count."""

    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise ValueError("grid start/step must be finite")
        if self.step <= 0.0:
            raise ValueError("grid step must be positive")
        if int(self.count) != self.count or self.count < 2:
            raise ValueError("grid count must be an integer >= 2")
        object.__setattr__(self, "count", int(self.count))

    def points(self) -> np.ndarray:
        pts = self.start + self.step * np.arange(self.count)
        pts.flags.writeable = False
        return pts

    @property
    def stop(self) -> float:
        return self.start + self.step * (self.count - 1)

    @property
    def span(self) -> float:
        return self.step * (self.count - 1)

    @classmethod
    def symmetric(cls, half_span: float, count: int) -> "UniformGrid":
        """Grid over [-half_span, half_span] with the given point count."""
        if count < 2:
            raise ValueError("grid count must be >= 2")
        return cls(-half_span, 2.0 * half_span / (count - 1), count)

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        return abs(self.start + self.stop) <= tol * self.step

    def describe(self) -> str:
        return f"[{self.start:g},{self.stop:g}]x{self.count}"


def _as_complex_samples(samples, count: int) -> np.ndarray:
    arr = np.asarray(samples, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError("samples must be one-dimensional")
    if arr.shape[0] != count:
        raise ValueError(f"sample count {arr.shape[0]} does not match grid count {count}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("samples must be finite")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Signal:
    """Complex-valued function sampled on a uniform position grid."""

    grid: UniformGrid
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "samples", _as_complex_samples(self.samples, self.grid.count))

    def with_samples(self, samples) -> "Signal":
        return Signal(self.grid, samples)

    def __len__(self) -> int:
        return self.grid.count


@dataclass(frozen=True)
class Window(
):
    """A signal designated as analysis window; carries its L2 norm (> 0)."""

    signal: Signal
    l2_norm: float

    def __post_init__(self):
        norm = signal_norm(self.signal, 2)
        if norm <= 1e-12:
            raise ValueError("window norm must exceed 1e-12")
        if abs(self.l2_norm - norm) > 1e-12 * norm:
            raise ValueError("recorded window norm disagrees with samples")

    @classmethod
    def from_signal(cls, signal: Signal) -> "Window":
        return cls(signal, signal_norm(signal, 2))

    @property
    def grid(self) -> UniformGrid:
        return self.signal.grid

    @property
    def samples(self) -> np.ndarray:
        return self.signal.samples


@dataclass(frozen=True)
class TfGrid:
    """Time-frequency grid: window-center axis u and frequency axis w."""

    u_grid: UniformGrid
    w_grid: UniformGrid

    def describe(self) -> str:
        return f"u{self.u_grid.describe()} w{self.w_grid.describe()}"


@dataclass(frozen=True)
class TfMap:
    """Complex matrix over a TfGrid; rows follow u, columns follow w."""

    tf_grid: TfGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.complex128)
        shape = (self.tf_grid.u_grid.count, self.tf_grid.w_grid.count)
        if arr.shape != shape:
            raise ValueError(f"value shape {arr.shape} does not match grid shape {shape}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("values must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)


@dataclass(frozen=True)
class DefectReport:
    """LHS/RHS comparison record for one identity on one grid."""

    identity_name: str
    max_abs_defect: float
    rel_defect: float
    grid_meta: str
    passed: bool
    tolerance: float


def defect_report(name: str, lhs, rhs, tolerance: float, grid_meta: str = "") -> DefectReport:
    """Build a DefectReport from LHS/RHS arrays.

    rel_defect = max|LHS-RHS| / max(max|LHS|, floor); defined as 0 when both
    sides vanish below the floor, so near-zero identities do not blow up.
    """
    lhs = np.asarray(lhs, dtype=np.complex128)
    rhs = np.asarray(rhs, dtype=np.complex128)
    max_abs = float(np.max(np.abs(lhs - rhs))) if lhs.size else 0.0
    lhs_mag = float(np.max(np.abs(lhs))) if lhs.size else 0.0
    rhs_mag = float(np.max(np.abs(rhs))) if rhs.size else 0.0
    if lhs_mag < VANISH_FLOOR and rhs_mag < VANISH_FLOOR:
        rel = 0.0
    else:
        rel = max_abs / max(lhs_mag, VANISH_FLOOR)
    return DefectReport(name, max_abs, rel, grid_meta, rel <= tolerance, tolerance)


def inequality_report(name: str, lhs_value: float, rhs_value: float,
                      grid_meta: str = "", slack: float = 1e-6) -> DefectReport:
    """Report LHS <= RHS with multiplicative slack; records the slack ratio."""
    lhs_value = float(lhs_value)
    rhs_value = float(rhs_value)
    excess = max(0.0, (lhs_value - rhs_value) / max(rhs_value, VANISH_FLOOR))
    ratio = lhs_value / max(rhs_value, VANISH_FLOOR)
    meta = f"{grid_meta} slack_ratio={ratio!r}".strip()
    return DefectReport(name, max(0.0, lhs_value - rhs_value), excess, meta,
                        excess <= slack, slack)


def trapezoid_weights(count: int) -> np.ndarray:
    """Composite trapezoid weight pattern (1/2, 1, ..., 1, 1/2)."""
    if count < 2:
        raise ValueError("need at least 2 samples")
    w = np.ones(count)
    w[0] = w[-1] = 0.5
    return w


def signal_norm(f: Signal, p) -> float:
    """Discrete L^p norm with the grid step as quadrature weight.

    Finite p: (sum |f_i|^p * step)^(1/p). p = inf: max |f_i|.
    """
    if p == math.inf or p == np.inf:
        return float(np.max(np.abs(f.samples)))
    p = float(p)
    if not math.isfinite(p) or p < 1.0:
        raise ValueError("p must be >= 1 or infinity")
    mags = np.abs(f.samples)
    return float((np.sum(mags ** p) * f.grid.step) ** (1.0 / p))


def inner_product(f: Signal, g: Signal) -> complex:
    """Trapezoid-rule <f, g> = integral of f * conj(g) over the shared grid."""
    if f.grid != g.grid:
        raise ValueError("grid mismatch")
    w = trapezoid_weights(f.grid.count) * f.grid.step
    return complex(np.sum(f.samples * np.conj(g.samples) * w))

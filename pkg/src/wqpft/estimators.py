"""Scikit-learn style estimator facade over the transform core.

Signals are rows of a 2-D complex array (n_signals, n_points); transforms
return 2-D arrays so the estimators compose with sklearn pipelines. Grids are
configured as (start, step, count) tuples to keep get_params round-trippable.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .core import Signal, TfGrid, TfMap, UniformGrid, Window, make_params
from .generate import generate
from .qpft import matched_w_grid, qpft_forward, qpft_inverse, Spectrum
from .solver import SolverOptions, solve
from .windowed import wqpft_forward, wqpft_inverse

__all__ = ["QpftTransform", "WqpftTransform", "ConvolutionEquationSolver"]


def _as_grid(spec) -> UniformGrid:
    if isinstance(spec, UniformGrid):
        return spec
    start, step, count = spec
    return UniformGrid(float(start), float(step), int(count))


def validate_signal_rows(X, count: int) -> np.ndarray:
    """Coerce to a finite, 2-D complex array with the configured row length."""
    arr = np.asarray(X, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise ValueError("expected a 1-D signal or a 2-D (n_signals, n_points) array")
    if arr.shape[1] != count:
        raise ValueError(f"expected rows of length {count}, got {arr.shape[1]}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("signal values must be finite")
    return arr


def _window_from_spec(spec, grid: UniformGrid) -> Window:
    if isinstance(spec, Window):
        return spec
    if isinstance(spec, (tuple, list)) and len(spec) == 2 and spec[0] == "gaussian":
        return Window.from_signal(generate("gaussian", grid, sigma=float(spec[1])))
    arr = np.asarray(spec, dtype=np.complex128)
    return Window.from_signal(Signal(grid, arr))


class QpftTransform(BaseEstimator, TransformerMixin):
    """Quadratic-phase Fourier transform of signal rows.

    params is the kernel 5-tuple (a, b, c, d, e); x_grid is (start, step,
    count). w_grid defaults to the matched full-band grid on which the
    transform pair is numerically unitary.
    """

    def __init__(self, params=(0.0, 1.0, 0.0, 0.0, 0.0),
                 x_grid=(-8.0, 0.015625, 1025), w_grid=None):
        self.params = params
        self.x_grid = x_grid
        self.w_grid = w_grid

    def fit(self, X=None, y=None):
        self.params_ = make_params(*self.params)
        self.x_grid_ = _as_grid(self.x_grid)
        self.w_grid_ = _as_grid(self.w_grid) if self.w_grid is not None else \
            matched_w_grid(self.params_, self.x_grid_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "params_"):
            raise NotFittedError("call fit before transform")

    def transform(self, X):
        self._check_fitted()
        rows = validate_signal_rows(X, self.x_grid_.count)
        out = np.empty((rows.shape[0], self.w_grid_.count), dtype=np.complex128)
        for i, row in enumerate(rows):
            out[i] = qpft_forward(Signal(self.x_grid_, row), self.params_, self.w_grid_).values
        return out

    def inverse_transform(self, X):
        self._check_fitted()
        rows = validate_signal_rows(X, self.w_grid_.count)
        out = np.empty((rows.shape[0], self.x_grid_.count), dtype=np.complex128)
        for i, row in enumerate(rows):
            spec = Spectrum(self.w_grid_, row)
            out[i] = qpft_inverse(spec, self.params_, self.x_grid_).samples
        return out


class WqpftTransform(BaseEstimator, TransformerMixin):
    """Windowed quadratic-phase transform of signal rows.

    Output rows are flattened (u, w) surfaces of length u_count * w_count;
    inverse_transform reconstructs signals from flattened surfaces.
    """

    def __init__(self, params=(0.0, 1.0, 0.0, 0.0, 0.0), window=("gaussian", 1.0),
                 x_grid=(-8.0, 0.0625, 257), u_grid=(-16.0, 0.125, 257),
                 w_grid=(-20.0, 0.15625, 257)):
        self.params = params
        self.window = window
        self.x_grid = x_grid
        self.u_grid = u_grid
        self.w_grid = w_grid

    def fit(self, X=None, y=None):
        self.params_ = make_params(*self.params)
        self.x_grid_ = _as_grid(self.x_grid)
        self.tf_grid_ = TfGrid(_as_grid(self.u_grid), _as_grid(self.w_grid))
        self.window_ = _window_from_spec(self.window, self.x_grid_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "params_"):
            raise NotFittedError("call fit before transform")

    def transform(self, X):
        self._check_fitted()
        rows = validate_signal_rows(X, self.x_grid_.count)
        n_out = self.tf_grid_.u_grid.count * self.tf_grid_.w_grid.count
        out = np.empty((rows.shape[0], n_out), dtype=np.complex128)
        for i, row in enumerate(rows):
            surface = wqpft_forward(Signal(self.x_grid_, row), self.window_,
                                    self.params_, self.tf_grid_, warn_dropped=False)
            out[i] = surface.values.reshape(-1)
        return out

    def inverse_transform(self, X):
        self._check_fitted()
        shape = (self.tf_grid_.u_grid.count, self.tf_grid_.w_grid.count)
        rows = validate_signal_rows(X, shape[0] * shape[1])
        out = np.empty((rows.shape[0], self.x_grid_.count), dtype=np.complex128)
        for i, row in enumerate(rows):
            tfmap = TfMap(self.tf_grid_, row.reshape(shape))
            out[i] = wqpft_inverse(tfmap, self.window_, self.window_,
                                   self.params_, self.x_grid_).samples
        return out


class ConvolutionEquationSolver(BaseEstimator):
    """Solve tau*nu + (h spectrally-convolved nu) = f for rows of f.

    fit(h) freezes the transform-domain symbol tau + Q[h]; predict(F) returns
    one recovered nu row per input row.
    """

    def __init__(self, params=(0.5, 1.0, 0.3, 0.1, 0.2), window=("gaussian", 1.0),
                 tau=1.0, x_grid=(-8.0, 0.0625, 257), u_grid=(-16.0, 0.25, 129),
                 w_grid=(-20.0, 0.2083333333333333, 193), regularization="threshold",
                 lam=0.0, psi_floor=None):
        self.params = params
        self.window = window
        self.tau = tau
        self.x_grid = x_grid
        self.u_grid = u_grid
        self.w_grid = w_grid
        self.regularization = regularization
        self.lam = lam
        self.psi_floor = psi_floor

    def fit(self, h, y=None):
        self.params_ = make_params(*self.params)
        self.x_grid_ = _as_grid(self.x_grid)
        self.window_ = _window_from_spec(self.window, self.x_grid_)
        tf = TfGrid(_as_grid(self.u_grid), _as_grid(self.w_grid))
        self.options_ = SolverOptions(tau=complex(self.tau), tf=tf,
                                      psi_floor=self.psi_floor,
                                      regularization=self.regularization, lam=self.lam)
        h_rows = validate_signal_rows(h, self.x_grid_.count)
        if h_rows.shape[0] != 1:
            raise ValueError("fit expects a single kernel signal h")
        self.h_ = Signal(self.x_grid_, h_rows[0])
        return self

    def predict(self, F):
        if not hasattr(self, "h_"):
            raise NotFittedError("call fit before predict")
        rows = validate_signal_rows(F, self.x_grid_.count)
        out = np.empty_like(rows)
        self.residuals_ = []
        for i, row in enumerate(rows):
            result = solve(Signal(self.x_grid_, row), self.h_, self.window_,
                           self.params_, self.options_, self.x_grid_)
            out[i] = result.nu.samples
            self.residuals_.append(result.residual)
            self.diagnostics_ = result.diagnostics
        return out

"""Deterministic signal generators for fixtures and the CLI."""

from __future__ import annotations

import numpy as np

from .core import Signal, UniformGrid

__all__ = ["generate", "lcg_doubles", "GENERATOR_KINDS"]

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

GENERATOR_KINDS = ("gaussian", "chirp", "boxcar", "two_tone", "noise")


def lcg_doubles(seed: int, count: int) -> np.ndarray:
    """count doubles in [-1, 1) from the 64-bit linear congruential stream.

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64,
    emitting (state >> 11) / 2^52 - 1 after each update. Fixed here so fixture
    streams are reproducible across languages and runtimes.
    """
    state = int(seed) & _MASK64
    out = np.empty(count, dtype=np.float64)
    for i in range(count):
        state = (LCG_MULTIPLIER * state + LCG_INCREMENT) & _MASK64
        out[i] = (state >> 11) / float(1 << 52) - 1.0
    return out


def generate(kind: str, grid: UniformGrid, **params) -> Signal:
    """Build a named deterministic signal on the grid.

    gaussian(sigma, x0): exp(-(x - x0)^2 / (2 sigma^2))
    chirp(sigma, rate, carrier): gaussian envelope times e^{i(rate x^2 + carrier x)}
    boxcar(half_width): 1 inside |x| < half_width, 1/2 on the jump samples
    two_tone(w1, w2, sigma): gaussian envelope times (e^{i w1 x} + e^{i w2 x}) / 2
    noise(seed): complex samples from the fixed congruential stream
    """
    x = grid.points()
    if kind == "gaussian":
        sigma = float(params.pop("sigma", 1.0))
        x0 = float(params.pop("x0", 0.0))
        _reject_extras(kind, params)
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        vals = np.exp(-((x - x0) ** 2) / (2.0 * sigma ** 2))
    elif kind == "chirp":
        sigma = float(params.pop("sigma", 1.0))
        rate = float(params.pop("rate", 0.5))
        carrier = float(params.pop("carrier", 3.0))
        _reject_extras(kind, params)
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        vals = np.exp(-(x ** 2) / (2.0 * sigma ** 2)) * np.exp(1j * (rate * x ** 2 + carrier * x))
    elif kind == "boxcar":
        half_width = float(params.pop("half_width", 1.0))
        _reject_extras(kind, params)
        if half_width <= 0:
            raise ValueError("half_width must be positive")
        vals = np.where(np.abs(x) < half_width, 1.0, 0.0)
        edge = np.isclose(np.abs(x), half_width, rtol=0.0, atol=1e-12 * grid.step + 1e-15)
        vals = vals + 0.5 * edge
    elif kind == "two_tone":
        w1 = float(params.pop("w1", 1.5))
        w2 = float(params.pop("w2", -2.5))
        sigma = float(params.pop("sigma", 2.0))
        _reject_extras(kind, params)
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        vals = 0.5 * np.exp(-(x ** 2) / (2.0 * sigma ** 2)) * (np.exp(1j * w1 * x) + np.exp(1j * w2 * x))
    elif kind == "noise":
        seed = int(params.pop("seed", 0))
        _reject_extras(kind, params)
        draws = lcg_doubles(seed, 2 * grid.count)
        vals = draws[0::2] + 1j * draws[1::2]
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return Signal(grid, vals)


def _reject_extras(kind: str, params: dict) -> None:
    if params:
        raise ValueError(f"unexpected parameters for {kind!r}: {sorted(params)}")

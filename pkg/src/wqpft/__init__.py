"""Windowed quadratic-phase Fourier transform toolkit.

Numerical transforms with a five-parameter chirp kernel, their windowed
time-frequency variant, the associated convolution theorems as executable
identities, and a transform-domain deconvolution solver.
"""

from .core import (
    DefectReport,
    QpftParams,
    Signal,
    TfGrid,
    TfMap,
    UniformGrid,
    Window,
    inner_product,
    make_params,
    neg_params,
    signal_norm,
)
from .quadrature import QuadratureSpec, ResolutionWarning, integrate, nyquist_check, oracle_qpft_gaussian
from .qpft import (
    Spectrum,
    chirp_convolve,
    inverse_kernel,
    kernel,
    matched_w_grid,
    parseval_defect,
    qpft_convolution_defect,
    qpft_forward,
    qpft_inverse,
    rl_decay_profile,
)
from .windowed import (
    continuity_modulus,
    energy_defect,
    identity_defect,
    minkowski_bound_check,
    reproducing_kernel,
    rk_project,
    wqpft_forward,
    wqpft_inverse,
    wqpft_via_qpft,
)
from .convolution import (
    spatial_lhs,
    spatial_rhs,
    spectral_convolve,
    spectral_norm_check,
    spectral_product,
    sup_norm_check,
    young_bound_check,
)
from .solver import PsiDiagnostics, SolverOptions, SolveResult, psi_diagnostics, psi_field, solve
from .generate import generate
from .estimators import ConvolutionEquationSolver, QpftTransform, WqpftTransform

__version__ = "0.1.0"

__all__ = [
    "QpftParams", "UniformGrid", "Signal", "Window", "TfGrid", "TfMap", "DefectReport",
    "make_params", "neg_params", "signal_norm", "inner_product",
    "QuadratureSpec", "ResolutionWarning", "integrate", "nyquist_check", "oracle_qpft_gaussian",
    "Spectrum", "kernel", "inverse_kernel", "matched_w_grid", "qpft_forward", "qpft_inverse",
    "parseval_defect", "chirp_convolve", "qpft_convolution_defect", "rl_decay_profile",
    "wqpft_forward", "wqpft_via_qpft", "wqpft_inverse", "reproducing_kernel", "rk_project",
    "identity_defect", "continuity_modulus", "energy_defect", "minkowski_bound_check",
    "spectral_product", "spectral_convolve", "spatial_lhs", "spatial_rhs",
    "spectral_norm_check", "young_bound_check", "sup_norm_check",
    "SolverOptions", "PsiDiagnostics", "SolveResult", "psi_field", "psi_diagnostics", "solve",
    "generate",
    "QpftTransform", "WqpftTransform", "ConvolutionEquationSolver",
    "__version__",
]

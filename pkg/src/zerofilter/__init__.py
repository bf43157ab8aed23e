"""zerofilter: a pseudo-spectral laboratory for the vanishing-filter
limit of a filtered nonlinear transport model on a periodic interval.

The package integrates the filtered model and its unfiltered limit side
by side, measures Sobolev-norm gaps between the two flows, and packages
the measurements as CSV tables with machine-checkable verdicts.
"""
__version__ = "1.0.0"

from .errors import (BreakdownDetected, ConfigError, InvalidOrder, IoError,
                     KernelUndefined, MissingFile, NoConvergence, ParseError,
                     PastBreakingTime, PeriodizationError, ResolutionExceeded,
                     ValidationError, ZeroFilterError)
from .spectral import (Field, Grid, dealias, derivative, evaluate_at,
                       shift_samples, sobolev_norm, sup_norm, transform)
from .operators import (PeriodizedKernel, filtered_second_derivative,
                        green_convolve, helmholtz_inverse, nonlocal_ch_terms)
from .dynamics import (E_functional, F_functional, SolverConfig, Trajectory,
                       breaking_time_estimate, burgers_rhs, ch_rhs,
                       characteristics_oracle, rk4_integrate)
from .constructions import (BumpProfile, DEFAULT_BUMP, SequenceIndex,
                            SupportReport, build_fn, build_gn, build_phi,
                            build_u0n, check_product_support)
from .experiments import (ExperimentConfig, ExperimentResult, run_lemma_suite,
                          run_nonuniform, run_operator_bench, run_taylor_order,
                          run_zero_filter_limit)
from .config import load_config
from ._kernels import BACKEND as _KERNEL_BACKEND


def kernel_backend() -> str:
    """Name of the active convolution backend, "ext" or "fallback"."""
    return _KERNEL_BACKEND


__all__ = [
    "__version__",
    "ZeroFilterError", "BreakdownDetected", "InvalidOrder", "KernelUndefined",
    "ResolutionExceeded", "PeriodizationError", "PastBreakingTime",
    "NoConvergence", "ConfigError", "MissingFile", "ParseError",
    "ValidationError", "IoError",
    "Grid", "Field", "transform", "derivative", "sobolev_norm", "sup_norm",
    "dealias", "shift_samples", "evaluate_at",
    "PeriodizedKernel", "helmholtz_inverse", "green_convolve",
    "filtered_second_derivative", "nonlocal_ch_terms",
    "SolverConfig", "Trajectory", "ch_rhs", "burgers_rhs", "E_functional",
    "F_functional", "rk4_integrate", "breaking_time_estimate",
    "characteristics_oracle",
    "BumpProfile", "DEFAULT_BUMP", "SequenceIndex", "SupportReport",
    "build_phi", "build_fn", "build_gn", "build_u0n", "check_product_support",
    "ExperimentConfig", "ExperimentResult", "run_zero_filter_limit",
    "run_taylor_order", "run_nonuniform", "run_lemma_suite",
    "run_operator_bench",
    "load_config", "kernel_backend",
]

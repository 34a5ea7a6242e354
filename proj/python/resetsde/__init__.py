"""Brownian motion with stochastic resetting: simulation, closed forms and
Fokker-Planck solves. Thin wrapper over the C++ library."""

from ._core import (
    ConfigError,
    DomainError,
    NumericalError,
    ProcessSpec,
    UnsupportedCase,
    __version__,
    cdf,
    char_fn,
    classify_regime,
    fit_power_law_exponent,
    ks_distance,
    ks_two_sample,
    marginal_samples,
    mean,
    mgf,
    npp_char_fn,
    npp_msd,
    npp_pdf,
    nth_moment,
    pdf,
    run_suite,
    simulate,
    solve_fpe,
    stationary_pdf,
    suite_names,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "NumericalError",
    "ProcessSpec",
    "UnsupportedCase",
    "__version__",
    "cdf",
    "char_fn",
    "classify_regime",
    "fit_power_law_exponent",
    "ks_distance",
    "ks_two_sample",
    "marginal_samples",
    "mean",
    "mgf",
    "npp_char_fn",
    "npp_msd",
    "npp_pdf",
    "nth_moment",
    "pdf",
    "run_suite",
    "simulate",
    "solve_fpe",
    "stationary_pdf",
    "suite_names",
]

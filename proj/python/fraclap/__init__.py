"""Fractional Laplacians of power functions on the unit ball and eigenvalue bounds."""

from ._core import (
    ConvergenceError,
    DomainError,
    PoleError,
    SolverError,
    a_const,
    compute_bounds,
    eta_lemma,
    frac_lap,
    frac_lap_oracle,
    hyp2f1,
    moment_integral,
    mu_lower,
    poly_u,
    poly_v,
    ritz_upper,
    two_term_eta_min,
    two_term_upper,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "PoleError",
    "SolverError",
    "a_const",
    "compute_bounds",
    "eta_lemma",
    "frac_lap",
    "frac_lap_oracle",
    "hyp2f1",
    "moment_integral",
    "mu_lower",
    "poly_u",
    "poly_v",
    "ritz_upper",
    "two_term_eta_min",
    "two_term_upper",
]

"""Aharonov-Bohm eigenfunctions by series and closed forms, with numerical checks."""

from .eigenfunctions import (
    EvalPoint,
    FluxParameter,
    closed_half_integer_AB,
    closed_half_integer_corrected,
    closed_integer,
    decompose_F,
    evaluate,
    series_F,
    series_f_eps,
)
from .errors import AbfluxError, ConvergenceError, DomainError, PreconditionError
from .propagator import PropagatorParams, SpacetimePoint, free_propagator_2d, propagator_K
from .special import SeriesConfig, bessel_j, bessel_j_sequence, fresnel_e, gamma

__version__ = "0.1.0"

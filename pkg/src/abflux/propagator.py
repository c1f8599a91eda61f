"""Aharonov-Bohm propagator

    K(r, r'; tau) = 1/(2 pi i tau) exp(i (r^2 + r'^2) / (2 tau)) F_alpha(r r' / tau, theta - theta')

with tau = hbar t / m the only time variable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .eigenfunctions import (
    EvalPoint,
    FluxParameter,
    closed_half_integer_corrected,
    closed_integer,
    series_F,
)
from .errors import DomainError, PreconditionError
from .special import DEFAULT_CONFIG, SeriesConfig

STRATEGIES = ("series", "closed_auto")


@dataclass(frozen=True)
class PropagatorParams:
    tau: float
    flux: FluxParameter

    def __post_init__(self):
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise DomainError(f"tau must be finite and > 0, got {self.tau}")


@dataclass(frozen=True)
class SpacetimePoint:
    """Initial point (r, theta) and final point (r_prime, theta_prime)."""

    r: float
    theta: float
    r_prime: float
    theta_prime: float

    def __post_init__(self):
        for name in ("r", "r_prime"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be finite and >= 0, got {v}")
        for name in ("theta", "theta_prime"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")


def _prefactor(tau: float) -> complex:
    # 1 / (2 pi i tau) = -i / (2 pi tau)
    return complex(0.0, -1.0 / (2.0 * math.pi * tau))


def propagator_K(params: PropagatorParams, pts: SpacetimePoint, strategy: str = "closed_auto",
                 cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    tau, flux = params.tau, params.flux
    p = EvalPoint(pts.r * pts.r_prime / tau, pts.theta - pts.theta_prime)
    if strategy == "series":
        f = series_F(flux, p, cfg)
    elif strategy == "closed_auto":
        if flux.is_integer:
            f = closed_integer(flux, p)
        elif flux.is_half_integer:
            f = closed_half_integer_corrected(flux.floor, p, "fresnel")
        else:
            f = series_F(flux, p, cfg)
    else:
        raise PreconditionError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    gauss = cmath.exp(0.5j * (pts.r**2 + pts.r_prime**2) / tau)
    return _prefactor(tau) * gauss * f


def free_propagator_2d(tau: float, pts: SpacetimePoint) -> complex:
    """Free-particle kernel 1/(2 pi i tau) exp(i d^2 / (2 tau)), d by the law of cosines."""
    if not (math.isfinite(tau) and tau > 0):
        raise DomainError(f"tau must be finite and > 0, got {tau}")
    d2 = pts.r**2 + pts.r_prime**2 - 2.0 * pts.r * pts.r_prime * math.cos(pts.theta - pts.theta_prime)
    return _prefactor(tau) * cmath.exp(0.5j * d2 / tau)

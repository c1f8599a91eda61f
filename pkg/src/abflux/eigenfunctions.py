"""Aharonov-Bohm eigenfunctions F_alpha(rho, theta).

Ground truth is the bilateral Bessel series

    F_alpha(rho, theta) = sum_n (-i)^|n+alpha| J_|n+alpha|(rho) exp(i n theta),

evaluated by :func:`series_F`. The other evaluators (floor/fraction
decomposition, integer-flux plane wave, the historical and the corrected
half-integer closed forms) are checked against it.

Angles are never reduced modulo 2*pi: multi-valued formulas must stay
observably multi-valued.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConvergenceError, DomainError, PreconditionError
from .quadrature import integrate
from .special import DEFAULT_CONFIG, SeriesConfig, bessel_j_sequence, fresnel_e

# (-i)^m for integer m, indexed by m mod 4
_MINUS_I_POW = (1 + 0j, -1j, -1 + 0j, 1j)

SQRT_MINUS_I = cmath.sqrt(-1j)
SQRT_I_HALF = cmath.sqrt(0.5j)
SQRT_PI_I = cmath.sqrt(math.pi * 1j)
SQRT_2PI_I = cmath.sqrt(2.0 * math.pi * 1j)

METHODS = ("series", "decompose", "closed", "ab-original", "convolution")


@dataclass(frozen=True)
class FluxParameter:
    """Dimensionless flux with its integer and fractional parts.

    Classification is exact on the binary value of ``alpha``: 2.5 is
    half-integer, 2.5000000000000004 is not.
    """

    alpha: float
    floor: int = field(init=False)
    frac: float = field(init=False)

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be finite, got {self.alpha}")
        fl = math.floor(self.alpha)
        frac = self.alpha - fl
        if frac == 1.0:
            # alpha in (-1.2e-16, 0): the difference rounds up to one
            fl, frac = fl + 1, 0.0
        object.__setattr__(self, "floor", fl)
        object.__setattr__(self, "frac", frac)

    @property
    def is_integer(self) -> bool:
        return self.frac == 0.0

    @property
    def is_half_integer(self) -> bool:
        return self.frac == 0.5


@dataclass(frozen=True)
class EvalPoint:
    """Polar evaluation point; ``rho`` is the dimensionless radius (k r)."""

    rho: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho >= 0):
            raise DomainError(f"rho must be finite and >= 0, got {self.rho}")
        if not math.isfinite(self.theta):
            raise DomainError(f"theta must be finite, got {self.theta}")


def _minus_i_power(m: int, base: complex) -> complex:
    """(-i)^(m + nu0) given base = (-i)^nu0 and integer m >= 0."""
    return _MINUS_I_POW[m % 4] * base


def _min_terms(rho: float) -> int:
    # J_nu(rho) only starts to decay once nu exceeds rho
    return math.ceil(rho) + 20


def series_F(flux: FluxParameter, p: EvalPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """F_alpha by symmetric truncation n in [-N, N] of the bilateral series."""
    fl, fr = flux.floor, flux.frac
    rho, theta = p.rho, p.theta
    n_min = _min_terms(rho)

    # orders are fr + k for k = n + fl >= 0 and low + (-k - 1) for k < 0, with
    # low = 1 - fr. low == 1 (integer flux, or fr below half an ulp of 1) is
    # served by the nu0 = 0 ladder shifted by one.
    low = 1.0 - fr
    low_shift = math.floor(low)
    low0 = low - low_shift
    ladder_len = n_min + abs(fl) + 8
    base_upper = cmath.exp(-0.5j * math.pi * fr)
    base_lower = cmath.exp(-0.5j * math.pi * low)

    def refresh(length):
        up = bessel_j_sequence(fr, length + low_shift, rho, cfg)
        lo = up if low0 == fr else bessel_j_sequence(low0, length + low_shift, rho, cfg)
        return up, lo

    upper, lower = refresh(ladder_len)

    def term(n):
        nonlocal upper, lower, ladder_len
        k = n + fl
        if k >= 0:
            m, base = k, base_upper
        else:
            m, base = -k - 1, base_lower
        if m > ladder_len:
            ladder_len = max(2 * ladder_len, m + 8)
            upper, lower = refresh(ladder_len)
        j = upper[m] if k >= 0 else lower[m + low_shift]
        return j * _minus_i_power(m, base) * cmath.exp(1j * n * theta), abs(j)

    total, _ = term(0)
    below_pos = below_neg = 0
    n = 0
    while True:
        n += 1
        if 2 * n + 1 > cfg.max_terms:
            raise ConvergenceError(
                f"series for F_{flux.alpha}({rho}, {theta}) not converged within {cfg.max_terms} terms")
        tp, ap = term(n)
        tn, an = term(-n)
        total += tp + tn
        below_pos = below_pos + 1 if ap < cfg.abs_tol else 0
        below_neg = below_neg + 1 if an < cfg.abs_tol else 0
        if n >= n_min and below_pos >= cfg.consecutive_below and below_neg >= cfg.consecutive_below:
            return total


def series_f_eps(eps: float, p: EvalPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Auxiliary one-sided series  f_eps = sum_{n>=0} (-i)^n J_{n+eps}(rho) exp(i n theta)."""
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    return _one_sided(eps, p, cfg)


def _one_sided(eps: float, p: EvalPoint, cfg: SeriesConfig) -> complex:
    # eps may equal 1.0 here when 1 - frac rounds up
    rho, theta = p.rho, p.theta
    shift = math.floor(eps)
    eps0 = eps - shift
    n_min = _min_terms(rho)
    length = n_min + 8
    ladder = bessel_j_sequence(eps0, length + shift, rho, cfg)

    total = 0j
    below = 0
    n = -1
    while True:
        n += 1
        if n + 1 > cfg.max_terms:
            raise ConvergenceError(
                f"series f_{eps}({rho}, {theta}) not converged within {cfg.max_terms} terms")
        if n > length:
            length *= 2
            ladder = bessel_j_sequence(eps0, length + shift, rho, cfg)
        j = ladder[n + shift]
        total += j * _MINUS_I_POW[n % 4] * cmath.exp(1j * n * theta)
        below = below + 1 if abs(j) < cfg.abs_tol else 0
        if n >= n_min and below >= cfg.consecutive_below:
            return total


def decompose_F(flux: FluxParameter, p: EvalPoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """F_alpha from two one-sided sums (valid for non-integer flux only)."""
    fr = flux.frac
    if not fr > 0:
        raise PreconditionError(f"decompose_F needs a non-integer flux, got alpha={flux.alpha}")
    th = p.theta
    head = cmath.exp(-1j * flux.floor * th)
    forward = cmath.exp(-0.5j * math.pi * fr) * _one_sided(fr, p, cfg)
    mirrored = (cmath.exp(-1j * th) * cmath.exp(-0.5j * math.pi * (1.0 - fr))
                * _one_sided(1.0 - fr, EvalPoint(p.rho, -th), cfg))
    return head * (forward + mirrored)


def closed_integer(flux: FluxParameter, p: EvalPoint) -> complex:
    """Plane wave exp(-i(floor(alpha) theta + rho cos theta)) for integer flux."""
    if not flux.is_integer:
        raise PreconditionError(f"closed_integer needs an integer flux, got alpha={flux.alpha}")
    return cmath.exp(-1j * (flux.floor * p.theta + p.rho * math.cos(p.theta)))


def _fresnel_upper_limit(p: EvalPoint) -> float:
    return math.sqrt(p.rho * max(0.0, 1.0 + math.cos(p.theta)))


def closed_half_integer_AB(p: EvalPoint) -> complex:
    """Aharonov and Bohm's original half-integer formula, transcribed as published.

    It carries no dependence on the integer part of the flux and is
    anti-periodic in theta: F(rho, theta + 2 pi) = -F(rho, theta).
    """
    th = p.theta
    phase = cmath.exp(-0.5j * th - 1j * p.rho * math.cos(th))
    return SQRT_I_HALF * phase * fresnel_e(_fresnel_upper_limit(p))


def _sgn(x: float) -> float:
    return (x > 0) - (x < 0)


def closed_half_integer_corrected(n: int, p: EvalPoint, form: str = "fresnel", *,
                                  quad_tol: float = 1e-13) -> complex:
    """Single-valued closed form of F_{n+1/2}.

    ``form="fresnel"`` evaluates

        2/sqrt(pi i) sgn(cos(theta/2)) exp(-i(n+1/2)theta - i rho cos theta) E(sqrt(rho(1+cos theta)))

    and ``form="convolution"`` integrates the pre-substitution convolution

        exp(-i n theta)/sqrt(2 pi i) (1 + exp(-i theta)) int_0^rho exp(i r') exp(-i(rho-r') cos theta) / sqrt(r') dr'

    with r' = u^2 so the endpoint singularity disappears.
    """
    if isinstance(n, float):
        if n != math.floor(n):
            raise PreconditionError(f"n must be an integer, got {n}")
        n = int(n)
    th = p.theta
    rho = p.rho
    if form == "fresnel":
        sign = _sgn(math.cos(0.5 * th))
        if sign == 0:
            return 0j
        phase = cmath.exp(-1j * (n + 0.5) * th - 1j * rho * math.cos(th))
        return 2.0 / SQRT_PI_I * sign * phase * fresnel_e(_fresnel_upper_limit(p))
    if form == "convolution":
        c = math.cos(th)
        prefactor = cmath.exp(-1j * n * th) / SQRT_2PI_I * (1.0 + cmath.exp(-1j * th))
        if rho == 0:
            return 0j
        upper = math.sqrt(rho)
        # one panel per ~pi of accumulated phase in exp(i u^2 (1 + cos theta))
        panels = 1 + int(rho * (1.0 + c) / math.pi)
        integral = integrate(lambda u: 2.0 * cmath.exp(1j * u * u - 1j * (rho - u * u) * c),
                             0.0, upper, tol=quad_tol, initial_panels=panels)
        return prefactor * integral
    raise ValueError(f"unknown form {form!r}; expected 'fresnel' or 'convolution'")


def evaluate(method: str, flux: FluxParameter, p: EvalPoint,
             cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Dispatch by method name, enforcing each method's flux precondition.

    ``closed`` picks the integer plane wave or the corrected half-integer
    formula; ``ab-original`` and ``convolution`` need half-integer flux.
    """
    if method == "series":
        return series_F(flux, p, cfg)
    if method == "decompose":
        return decompose_F(flux, p, cfg)
    if method == "closed":
        if flux.is_integer:
            return closed_integer(flux, p)
        if flux.is_half_integer:
            return closed_half_integer_corrected(flux.floor, p, "fresnel")
        raise PreconditionError(
            f"--method closed requires integer or half-integer --alpha, got {flux.alpha}")
    if method == "ab-original":
        if not flux.is_half_integer:
            raise PreconditionError(f"--method ab-original requires half-integer --alpha, got {flux.alpha}")
        return closed_half_integer_AB(p)
    if method == "convolution":
        if not flux.is_half_integer:
            raise PreconditionError(f"--method convolution requires half-integer --alpha, got {flux.alpha}")
        return closed_half_integer_corrected(flux.floor, p, "convolution")
    raise PreconditionError(f"unknown --method {method!r}; choose from {', '.join(METHODS)}")

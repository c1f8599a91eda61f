"""Forward numerical checks of the Laplace-transform identities behind the
half-integer closed form.

Every identity is checked as  quadrature of  int_0^inf exp(-s r) f(r) dr
against its closed-form right-hand side, for sampled s with Re s > 0.
Inversions are verified in the forward direction only.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .eigenfunctions import (
    SQRT_MINUS_I,
    EvalPoint,
    FluxParameter,
    closed_half_integer_corrected,
    series_F,
    series_f_eps,
)
from .errors import DomainError
from .quadrature import integrate
from .special import bessel_j

# exp(-40) ~ 4e-18: the envelope makes truncation negligible at r_max = 40/Re s
_ENVELOPE_DECADES = 40.0

DEFAULT_S = (1 + 0j, 2 + 0j, 1 + 1j, 0.5 + 2j)


@dataclass(frozen=True)
class LaplaceProbe:
    s: complex
    quad_tol: float = 1e-10
    r_max: float | None = None

    def __post_init__(self):
        s = complex(self.s)
        object.__setattr__(self, "s", s)
        if not (cmath.isfinite(s) and s.real > 0):
            raise DomainError(f"Laplace probes require Re[s] > 0, got s={s}")
        if self.r_max is None:
            object.__setattr__(self, "r_max", _ENVELOPE_DECADES / s.real)


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    tolerance: float
    abs_err: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        self.abs_err = abs(self.lhs - self.rhs)
        self.passed = self.abs_err <= self.tolerance

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("lhs", "rhs"):
            d[key] = [d[key].real, d[key].imag]
        d["params"] = {k: ([v.real, v.imag] if isinstance(v, complex) else v)
                       for k, v in self.params.items()}
        return d


def laplace_numeric(f: Callable[[float], complex], probe: LaplaceProbe) -> complex:
    """Quadrature of int_0^r_max exp(-s r) f(r) dr.

    The first panel [0, 1] is integrated in u = sqrt(r), which removes
    r^(-1/2) endpoint singularities; the rest is split into panels of about
    half an oscillation of exp(-i Im(s) r).
    """
    s = probe.s
    r_max = probe.r_max
    tol = 0.5 * probe.quad_tol
    head_end = min(1.0, r_max)

    def head(u):
        r = u * u
        return 2.0 * u * cmath.exp(-s * r) * f(r)

    total = integrate(head, 0.0, math.sqrt(head_end), tol=tol)
    if r_max > head_end:
        panels = 1 + int((r_max - head_end) * (abs(s.imag) + 2.0) / math.pi)
        total += integrate(lambda r: cmath.exp(-s * r) * f(r), head_end, r_max,
                           tol=tol, initial_panels=panels)
    return total


def _root(s: complex) -> complex:
    return cmath.sqrt(1.0 + s * s)


def _w(s: complex) -> complex:
    """s + sqrt(1 + s^2), which stays in the right half plane for Re s > 0."""
    if not s.real > 0:
        raise DomainError(f"Re[s] > 0 required, got s={s}")
    w = s + _root(s)
    if not w.real > 0:
        raise ArithmeticError(f"branch check failed: s + sqrt(1+s^2) = {w} left the right half plane")
    return w


def rhs_lap_bessel(nu: float, s: complex) -> complex:
    """Transform of J_nu:  (s + sqrt(1+s^2))^(-nu) / sqrt(1+s^2),  nu > -1."""
    if not nu > -1:
        raise DomainError(f"transform of J_nu needs nu > -1, got {nu}")
    s = complex(s)
    return _w(s) ** (-nu) / _root(s)


def rhs_lap_f_eps(eps: float, theta: float, s: complex) -> complex:
    """Transform of the one-sided series f_eps(r, theta)."""
    s = complex(s)
    w = _w(s)
    z = 1j * cmath.exp(1j * theta) / w
    if not abs(z) < 1:
        raise DomainError(f"geometric series ratio |{z}| >= 1 at s={s}, theta={theta}")
    return w ** (1.0 - eps) / (_root(s) * (w + 1j * cmath.exp(1j * theta)))


def rhs_half_integer_product(n: int, theta: float, s: complex) -> complex:
    """Simplified transform of F_{n+1/2}, a product of two invertible factors."""
    s = complex(s)
    w = _w(s)
    root = _root(s)
    return (0.5 * SQRT_MINUS_I * cmath.exp(-1j * n * theta) * (1.0 + cmath.exp(-1j * theta))
            * (w + 1j) / (root * cmath.sqrt(w)) / (s + 1j * math.cos(theta)))


def _half_integer_unsimplified(n: int, theta: float, s: complex) -> complex:
    # transform of F_{n+1/2} before the algebraic simplification, written out term by term
    s = complex(s)
    w = _w(s)
    root = _root(s)
    e_plus = cmath.exp(1j * theta)
    e_minus = cmath.exp(-1j * theta)
    bracket = (1.0 + e_minus) * (w + 1j) / ((w + 1j * e_plus) * (w + 1j * e_minus))
    return SQRT_MINUS_I * cmath.exp(-1j * n * theta) * cmath.sqrt(w) / root * bracket


def _half_integer_two_sums(n: int, theta: float, s: complex) -> complex:
    # same transform assembled from the two f_{1/2} transforms
    return (SQRT_MINUS_I * cmath.exp(-1j * n * theta) * rhs_lap_f_eps(0.5, theta, s)
            + SQRT_MINUS_I * cmath.exp(-1j * (n + 1) * theta) * rhs_lap_f_eps(0.5, -theta, s))


def rhs_plane_wave(theta: float, s: complex) -> complex:
    """Transform of exp(-i r cos theta)."""
    return 1.0 / (complex(s) + 1j * math.cos(theta))


def rhs_half_order(s: complex) -> complex:
    """Transform of sqrt(2/(pi r)) exp(i r) = J_{-1/2} + i J_{1/2}."""
    s = complex(s)
    w = _w(s)
    return (w + 1j) / (_root(s) * cmath.sqrt(w))


# --------------------------------------------------------------------------
# identity checks
# --------------------------------------------------------------------------

def check_bessel(nu: float, s: complex, tol: float = 1e-7) -> IdentityReport:
    probe = LaplaceProbe(s)
    lhs = laplace_numeric(lambda r: bessel_j(nu, r), probe)
    return IdentityReport("bessel", {"nu": nu, "s": probe.s}, lhs, rhs_lap_bessel(nu, probe.s), tol)


def check_f_eps(eps: float, theta: float, s: complex, tol: float = 1e-7) -> IdentityReport:
    probe = LaplaceProbe(s)
    rhs = rhs_lap_f_eps(eps, theta, probe.s)
    lhs = laplace_numeric(lambda r: series_f_eps(eps, EvalPoint(r, theta)), probe)
    return IdentityReport("f-eps", {"eps": eps, "theta": theta, "s": probe.s}, lhs, rhs, tol)


def check_simplification(n: int, theta: float, s: complex, tol: float = 1e-12) -> IdentityReport:
    """Formula against formula: the simplified product equals both unsimplified forms."""
    s = LaplaceProbe(s).s
    rhs = rhs_half_integer_product(n, theta, s)
    a = _half_integer_unsimplified(n, theta, s)
    b = _half_integer_two_sums(n, theta, s)
    lhs = a if abs(a - rhs) >= abs(b - rhs) else b
    return IdentityReport("simplification", {"n": n, "theta": theta, "s": s}, lhs, rhs, tol)


def check_plane_wave(theta: float, s: complex, tol: float = 1e-9) -> IdentityReport:
    probe = LaplaceProbe(s)
    c = math.cos(theta)
    lhs = laplace_numeric(lambda r: cmath.exp(-1j * r * c), probe)
    return IdentityReport("plane-wave", {"theta": theta, "s": probe.s}, lhs, rhs_plane_wave(theta, probe.s), tol)


def check_half_order(s: complex, tol: float = 1e-8) -> IdentityReport:
    probe = LaplaceProbe(s)
    k = math.sqrt(2.0 / math.pi)
    lhs = laplace_numeric(lambda r: k / math.sqrt(r) * cmath.exp(1j * r), probe)
    return IdentityReport("half-order", {"s": probe.s}, lhs, rhs_half_order(probe.s), tol)


def check_series_F(n: int, theta: float, s: complex, tol: float = 1e-8) -> IdentityReport:
    probe = LaplaceProbe(s)
    flux = FluxParameter(n + 0.5)
    lhs = laplace_numeric(lambda r: series_F(flux, EvalPoint(r, theta)), probe)
    return IdentityReport("series-F", {"n": n, "theta": theta, "s": probe.s}, lhs,
                          rhs_half_integer_product(n, theta, probe.s), tol)


def check_convolution(n: int, theta: float, s: complex, tol: float = 1e-7) -> IdentityReport:
    """Transform of the convolution-form F_{n+1/2} against the product formula."""
    probe = LaplaceProbe(s)
    lhs = laplace_numeric(
        lambda r: closed_half_integer_corrected(n, EvalPoint(r, theta), "convolution", quad_tol=1e-11),
        probe)
    return IdentityReport("convolution", {"n": n, "theta": theta, "s": probe.s}, lhs,
                          rhs_half_integer_product(n, theta, probe.s), tol)


IDENTITIES = ("bessel", "f-eps", "simplification", "plane-wave", "half-order", "series-F", "convolution")

_THETAS = (0.0, 1.0, 2.0, math.pi, 4.0)


def _random_simplification_probes(count: int, seed: int) -> list[tuple[int, float, complex]]:
    rng = random.Random(seed)
    return [(rng.randint(-2, 2), rng.uniform(-2 * math.pi, 2 * math.pi),
             complex(rng.uniform(0.25, 3.0), rng.uniform(-3.0, 3.0))) for _ in range(count)]


def run_identity(identity: str, s_values: Iterable[complex] | None = None,
                 seed: int = 12345) -> list[IdentityReport]:
    """Sweep one identity over its parameter set and the given s values.

    With ``s_values=None`` the default probe set is used; the formula-only
    ``simplification`` check then draws 50 seeded random probes.
    """
    custom = s_values is not None
    s_list = [LaplaceProbe(s).s for s in s_values] if custom else list(DEFAULT_S)
    if identity == "bessel":
        return [check_bessel(nu, s) for nu in (0.0, 0.5, 1.0, 2.5) for s in s_list]
    if identity == "f-eps":
        return [check_f_eps(eps, th, s) for eps in (0.25, 0.5, 0.75) for th in _THETAS for s in s_list]
    if identity == "simplification":
        if custom:
            return [check_simplification(n, th, s) for n in (-1, 0, 2) for th in _THETAS for s in s_list]
        return [check_simplification(*probe) for probe in _random_simplification_probes(50, seed)]
    if identity == "plane-wave":
        return [check_plane_wave(th, s) for th in _THETAS for s in s_list]
    if identity == "half-order":
        return [check_half_order(s) for s in s_list]
    if identity == "series-F":
        s_sub = s_list if custom else [1 + 0j, 1 + 1j]
        return [check_series_F(n, th, s) for n in (0, 1) for th in (0.5, 2.0) for s in s_sub]
    if identity == "convolution":
        s_sub = s_list if custom else [1 + 0j, 2 + 0j]
        return [check_convolution(0, 1.0, s) for s in s_sub]
    raise DomainError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)} or 'all'")


def run_all(s_values: Iterable[complex] | None = None) -> list[IdentityReport]:
    s_values = None if s_values is None else list(s_values)
    reports = []
    for identity in IDENTITIES:
        reports.extend(run_identity(identity, s_values))
    return reports

"""Gamma, Bessel J of real order and the complex Fresnel integral.

Everything here is written against the standard library only so that the
eigenfunction code has no hidden special-function dependency.

Bessel strategy: ascending power series for ``x <= X_SWITCH``; above that a
Miller backward recurrence over the order ladder ``nu0, nu0+1, ...``
normalised with the Neumann sum

    (x/2)**nu0 = sum_k (nu0 + 2k) * Gamma(nu0 + k) / k! * J_{nu0+2k}(x)

which stays well conditioned at every x (a single low-order anchor does not:
it is useless near a zero of J_{nu0} and the power series for it is
unusable at large x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

X_SWITCH = 12.0
FRESNEL_SWITCH = 3.0

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_RESCALE_AT = 1e200
_TINY_X = 1e-3


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation policy for the infinite sums.

    A sum stops once ``consecutive_below`` successive terms are smaller than
    ``abs_tol``; ``max_terms`` is a hard cap beyond which the caller gets a
    :class:`ConvergenceError`.
    """

    abs_tol: float = 1e-14
    max_terms: int = 10_000
    consecutive_below: int = 3

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.consecutive_below < 1:
            raise ValueError(f"consecutive_below must be >= 1, got {self.consecutive_below}")


DEFAULT_CONFIG = SeriesConfig()


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _lanczos_sum(z: float) -> float:
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    return acc


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    Lanczos approximation for ``x >= 0.5``, reflection formula below.
    Raises DomainError at the poles 0, -1, -2, ...
    """
    if not math.isfinite(x):
        raise DomainError(f"gamma requires a finite argument, got {x}")
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    a = _lanczos_sum(z)
    if x > 140.0:
        # t**(z+0.5) alone overflows well before Gamma does
        half = t ** (0.5 * (z + 0.5))
        return math.sqrt(2.0 * math.pi) * half * (half * math.exp(-t)) * a
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * a


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


# --------------------------------------------------------------------------
# Bessel functions of the first kind
# --------------------------------------------------------------------------

def _bessel_power_series(nu: float, x: float, max_terms: int = DEFAULT_CONFIG.max_terms) -> float:
    """Ascending series sum_m (-1)^m (x/2)^(nu+2m) / (m! Gamma(nu+m+1)), x > 0."""
    h = 0.5 * x
    if nu > 100.0:
        log_lead = nu * math.log(h) - log_gamma(nu + 1.0)
        if log_lead < -745.0:
            return 0.0
        term = math.exp(log_lead)
    else:
        term = h**nu / gamma(nu + 1.0)
    total = term
    q = -h * h
    m = 0
    while True:
        m += 1
        if m > max_terms:
            raise ConvergenceError(f"J_{nu}({x}) power series did not converge in {max_terms} terms")
        term *= q / (m * (nu + m))
        total += term
        # terms only shrink monotonically once m exceeds roughly h
        if m > h and abs(term) <= 1e-17 * abs(total):
            break
        if term == 0.0:
            break
    return total


def _miller_start(n_max: int, x: float) -> int:
    return max(n_max, math.ceil(x)) + 20 + math.ceil(12.0 * x ** (1.0 / 3.0))


def _bessel_backward(nu0: float, n_max: int, x: float) -> list[float]:
    """J_{nu0+k}(x) for k = 0..n_max by Miller recurrence, x > 0, 0 <= nu0 < 1."""
    top = _miller_start(n_max, x)

    # Neumann weights c_k = (nu0 + 2k) Gamma(nu0 + k) / k!
    n_weights = top // 2 + 1
    weights = [0.0] * n_weights
    weights[0] = gamma(nu0 + 1.0)
    h = weights[0]  # Gamma(nu0 + k) / k! at k = 1
    for k in range(1, n_weights):
        weights[k] = (nu0 + 2 * k) * h
        h *= (nu0 + k) / (k + 1)

    vals = [0.0] * (n_max + 1)
    f_above = 0.0
    f = 1e-30
    norm_sum = 0.0
    two_over_x = 2.0 / x
    for n in range(top, -1, -1):
        if n <= n_max:
            vals[n] = f
        if n % 2 == 0:
            norm_sum += weights[n // 2] * f
        if n == 0:
            break
        f_below = two_over_x * (nu0 + n) * f - f_above
        f_above, f = f, f_below
        if abs(f) > _RESCALE_AT:
            s = 1.0 / _RESCALE_AT
            f *= s
            f_above *= s
            norm_sum *= s
            for i in range(n, n_max + 1):
                vals[i] *= s

    scale = (0.5 * x) ** nu0 / norm_sum
    return [v * scale for v in vals]


def bessel_j(nu: float, x: float, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Bessel function of the first kind J_nu(x) for real order and x >= 0.

    Supported orders: nu >= 0, negative integers (via J_{-n} = (-1)^n J_n)
    and nu in (-1, 0).
    """
    if not (math.isfinite(nu) and math.isfinite(x)):
        raise DomainError(f"bessel_j needs finite arguments, got nu={nu}, x={x}")
    if x < 0:
        raise DomainError(f"bessel_j is defined here for x >= 0 only, got x={x}")

    if nu < 0:
        if nu == math.floor(nu):
            n = int(-nu)
            val = bessel_j(float(n), x, cfg)
            return -val if n % 2 else val
        if nu <= -1:
            raise DomainError(f"non-integer order {nu} below -1 is not supported")
        if x == 0:
            raise DomainError(f"J_{nu}(0) is infinite for -1 < nu < 0")
        if x <= X_SWITCH:
            return _bessel_power_series(nu, x, cfg.max_terms)
        j1, j2 = _bessel_backward(nu + 1.0, 1, x)
        return 2.0 * (nu + 1.0) / x * j1 - j2

    if x == 0:
        return 1.0 if nu == 0 else 0.0
    if x <= X_SWITCH:
        return _bessel_power_series(nu, x, cfg.max_terms)
    n = math.floor(nu)
    if n + 1 > cfg.max_terms:
        raise ConvergenceError(f"order {nu} exceeds max_terms={cfg.max_terms}")
    return _bessel_backward(nu - n, n, x)[-1]


def bessel_j_sequence(nu0: float, n_max: int, x: float,
                      cfg: SeriesConfig = DEFAULT_CONFIG) -> list[float]:
    """Return ``[J_{nu0}(x), J_{nu0+1}(x), ..., J_{nu0+n_max}(x)]``.

    One backward-recurrence pass serves the whole ladder, which is what makes
    the bilateral eigenfunction sums cheap.
    """
    if not 0 <= nu0 < 1:
        raise DomainError(f"nu0 must lie in [0, 1), got {nu0}")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"x must be finite and >= 0, got {x}")
    if n_max + 1 > cfg.max_terms:
        raise ConvergenceError(f"ladder of {n_max + 1} orders exceeds max_terms={cfg.max_terms}")
    if x == 0:
        out = [0.0] * (n_max + 1)
        if nu0 == 0:
            out[0] = 1.0
        return out
    if x < _TINY_X:
        # the recurrence factor 2(nu0+n)/x would overflow; the series converges in a few terms
        return [_bessel_power_series(nu0 + k, x, cfg.max_terms) for k in range(n_max + 1)]
    return _bessel_backward(nu0, n_max, x)


# --------------------------------------------------------------------------
# Fresnel integral
# --------------------------------------------------------------------------

FRESNEL_LIMIT = 0.5 * math.sqrt(math.pi) * cmath.exp(0.25j * math.pi)


def _fresnel_series(x: float) -> complex:
    # sum_k i^k x^(2k+1) / (k! (2k+1))
    x2 = x * x
    power = complex(x)  # i^k x^(2k+1) / k!
    total = power
    k = 0
    while True:
        k += 1
        power *= 1j * x2 / k
        term = power / (2 * k + 1)
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return total


def _fresnel_continued_fraction(x: float) -> complex:
    # Lentz evaluation of the erfc continued fraction in the normalised
    # variable t = x*sqrt(2/pi), where C(t) + iS(t) = int_0^t exp(i pi u^2 / 2) du.
    t = x * math.sqrt(2.0 / math.pi)
    b = complex(1.0, -2.0 * x * x)
    c = complex(1e300)
    d = h = 1.0 / b
    n = -1
    for _ in range(2, 1000):
        n += 2
        a = -n * (n + 1)
        b += 4.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta.real - 1.0) + abs(delta.imag) < 1e-16:
            break
    else:
        raise ConvergenceError(f"Fresnel continued fraction failed at x={x}")
    h *= complex(t, -t)
    cs = complex(0.5, 0.5) * (1.0 - cmath.exp(1j * x * x) * h)
    return math.sqrt(0.5 * math.pi) * cs


def fresnel_e(x: float) -> complex:
    """Complex Fresnel integral  E(x) = integral_0^x exp(i z^2) dz,  x >= 0."""
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"fresnel_e requires finite x >= 0, got {x}")
    if x == 0:
        return 0j
    if x <= FRESNEL_SWITCH:
        return _fresnel_series(x)
    return _fresnel_continued_fraction(x)

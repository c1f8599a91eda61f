import math

import mpmath
import pytest

mpmath.mp.dps = 30

STANDARD_RHOS = (0.1, 1.0, 5.0, 20.0)
STANDARD_THETAS = tuple(4 * math.pi * k / 16 for k in range(16))


def mp_fresnel(x: float) -> complex:
    """Independent oracle: mpmath quadrature of exp(i z^2) on [0, x]."""
    nodes = mpmath.linspace(0, x, max(2, int(x * x) + 2))
    return complex(mpmath.quad(lambda z: mpmath.expj(z * z), nodes))


def mp_series_F(alpha: float, rho: float, theta: float, half_width: int = 80) -> complex:
    """Independent oracle: the bilateral series summed with mpmath Bessel functions."""
    a = mpmath.mpf(alpha)
    return complex(mpmath.fsum(
        mpmath.power(-1j, abs(n + a)) * mpmath.besselj(abs(n + a), rho) * mpmath.expj(n * theta)
        for n in range(-half_width, half_width + 1)))


@pytest.fixture
def standard_grid():
    return [(rho, theta) for rho in STANDARD_RHOS for theta in STANDARD_THETAS]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

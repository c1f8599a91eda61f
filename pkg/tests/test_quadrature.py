import cmath
import math

import pytest

from abflux.errors import ConvergenceError
from abflux.quadrature import gk15, integrate


def test_kronrod_is_exact_for_polynomials():
    for deg in range(0, 23):
        val, _ = gk15(lambda x: x**deg, 0.0, 1.0)
        assert val == pytest.approx(1.0 / (deg + 1), rel=1e-13)


def test_gauss_part_exact_to_degree_13():
    _, err = gk15(lambda x: x**13, -1.0, 2.0)
    assert err <= 1e-12


def test_oscillatory_complex():
    got = integrate(lambda x: cmath.exp(5j * x), 0.0, 10.0, tol=1e-13)
    assert abs(got - (cmath.exp(50j) - 1) / 5j) <= 1e-12


def test_sqrt_endpoint():
    assert integrate(math.sqrt, 0.0, 1.0, tol=1e-12) == pytest.approx(2 / 3, abs=1e-11)


def test_reversed_and_empty():
    assert integrate(math.cos, 1.0, 0.0) == pytest.approx(-math.sin(1.0), abs=1e-13)
    assert integrate(math.cos, 2.0, 2.0) == 0


def test_budget_exhaustion():
    with pytest.raises(ConvergenceError):
        integrate(lambda x: 1 / math.sqrt(abs(x - 0.3)), 0.0, 1.0, tol=1e-15, max_panels=20)

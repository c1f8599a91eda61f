"""Acceptance suite: one test per criterion, each at its stated tolerance.

Every test prints a ``PASS``/``FAIL`` line; the lines are also collected and
repeated in the terminal summary (see ``conftest.py``).  Run just this file
with ``pytest tests/test_acceptance.py -v``.
"""

import cmath
import math
import random

import pytest
from conftest import STANDARD_RHOS, STANDARD_THETAS, mp_fresnel

from abflux import laplace
from abflux.cli import main as cli_main
from abflux.eigenfunctions import (
    EvalPoint,
    FluxParameter,
    closed_half_integer_AB,
    closed_half_integer_corrected,
    closed_integer,
    evaluate,
    series_F,
)
from abflux.fieldgrid import FieldGrid
from abflux.propagator import PropagatorParams, SpacetimePoint, free_propagator_2d, propagator_K
from abflux.special import FRESNEL_LIMIT, bessel_j, fresnel_e

RESULTS: list[str] = []

GRID = [(rho, theta) for rho in STANDARD_RHOS for theta in STANDARD_THETAS]
HALF_N = range(-2, 3)


def report(number: int, title: str, passed: bool, detail: str) -> bool:
    line = f"{'PASS' if passed else 'FAIL'}  criterion {number:>2}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    return passed


def test_criterion_01_integer_flux_closed_form():
    worst = max(abs(closed_integer(FluxParameter(a), EvalPoint(r, t)) - series_F(FluxParameter(a), EvalPoint(r, t)))
                for a in (-2, -1, 0, 1, 2, 3) for r, t in GRID)
    assert report(1, "integer flux plane wave", worst <= 1e-9, f"max err {worst:.3e} (tol 1e-9)")


def test_criterion_02_corrected_half_integer_form():
    worst = max(abs(closed_half_integer_corrected(n, EvalPoint(r, t), "fresnel")
                    - series_F(FluxParameter(n + 0.5), EvalPoint(r, t)))
                for n in HALF_N for r, t in GRID)
    assert report(2, "corrected half-integer form equals series", worst <= 1e-8, f"max err {worst:.3e} (tol 1e-8)")


def test_criterion_03_original_form_is_not_single_valued():
    rng = random.Random(3)
    samples = [(rng.uniform(0.1, 20), rng.uniform(0, 2 * math.pi)) for _ in range(20)]
    anti = max(abs(closed_half_integer_AB(EvalPoint(r, t + 2 * math.pi)) + closed_half_integer_AB(EvalPoint(r, t)))
               for r, t in samples)
    gap = max(abs(closed_half_integer_AB(EvalPoint(r, t)) - series_F(FluxParameter(0.5), EvalPoint(r, t)))
              for r, t in GRID)
    ok = anti <= 1e-12 and gap >= 0.1
    assert report(3, "original half-integer form flips sign over 2 pi", ok,
                  f"max |F(t+2pi)+F(t)| {anti:.3e} (tol 1e-12), max gap to series {gap:.3f} (need >= 0.1)")


def test_criterion_04_single_valuedness():
    alphas = (-2.5, -1.0, -0.3, 0.0, 0.25, 0.5, 0.7, 1.5, 2.9)
    thetas = (0.1, 1.0, 2.0, 3.0, 5.0)
    s_err = max(abs(series_F(FluxParameter(a), EvalPoint(r, t + 2 * math.pi))
                    - series_F(FluxParameter(a), EvalPoint(r, t)))
                for a in alphas for r in STANDARD_RHOS for t in thetas)
    c_err = max(abs(closed_half_integer_corrected(n, EvalPoint(r, t + 2 * math.pi))
                    - closed_half_integer_corrected(n, EvalPoint(r, t)))
                for n in HALF_N for r in STANDARD_RHOS for t in thetas)
    ok = s_err <= 1e-9 and c_err <= 1e-9
    assert report(4, "single-valuedness", ok, f"series {s_err:.3e}, corrected {c_err:.3e} (tol 1e-9)")


def test_criterion_05_zero_at_theta_pi():
    c_max = max(abs(closed_half_integer_corrected(n, EvalPoint(r, math.pi))) for n in HALF_N for r in (0.5, 5, 20))
    s_max = max(abs(series_F(FluxParameter(n + 0.5), EvalPoint(r, math.pi))) for n in HALF_N for r in (0.5, 5, 20))
    ok = c_max <= 1e-10 and s_max <= 1e-9
    assert report(5, "half-integer zero at theta = pi", ok,
                  f"corrected {c_max:.3e} (tol 1e-10), series {s_max:.3e} (tol 1e-9)")


@pytest.mark.slow
def test_criterion_06_laplace_identities():
    worst_quad = 0.0
    for identity in ("bessel", "f-eps", "plane-wave", "half-order"):
        worst_quad = max(worst_quad, max(r.abs_err for r in laplace.run_identity(identity)))
    simp = laplace.run_identity("simplification")
    worst_simp = max(r.abs_err for r in simp)
    ok = worst_quad <= 1e-7 and worst_simp <= 1e-12 and len(simp) == 50
    assert report(6, "Laplace identities", ok,
                  f"quadrature vs formula {worst_quad:.3e} (tol 1e-7), "
                  f"simplification over {len(simp)} probes {worst_simp:.3e} (tol 1e-12)")


def test_criterion_07_convolution_form():
    worst = max(abs(closed_half_integer_corrected(n, EvalPoint(r, t), "convolution")
                    - closed_half_integer_corrected(n, EvalPoint(r, t), "fresnel"))
                for n in HALF_N for r, t in GRID)
    assert report(7, "convolution form equals Fresnel form", worst <= 1e-8, f"max err {worst:.3e} (tol 1e-8)")


def test_criterion_08_propagator_reduces_to_free_kernel():
    worst = 0.0
    for r in (0.5, 2.0):
        for rp in (1.0, 3.0):
            for dth in (0.3, 2.0, math.pi):
                for tau in (0.1, 1.0, 10.0):
                    pts = SpacetimePoint(r, dth, rp, 0.0)
                    k = propagator_K(PropagatorParams(tau, FluxParameter(0.0)), pts)
                    worst = max(worst, abs(k - free_propagator_2d(tau, pts)))
    assert report(8, "zero-flux propagator is the free kernel", worst <= 1e-10, f"max err {worst:.3e} (tol 1e-10)")


def _jacobi_anger_residual(rho: float, phi: float) -> float:
    width = int(rho) + 40
    total = sum((1j) ** (n % 4) * bessel_j(float(n), rho) * cmath.exp(1j * n * phi) for n in range(-width, width + 1))
    return abs(total - cmath.exp(1j * rho * math.cos(phi)))


def test_criterion_09_special_functions():
    ja = max(_jacobi_anger_residual(r, phi) for r in (0.1, 1.0, 5.0, 12.0, 20.0) for phi in (0.0, 0.7, 2.0, math.pi))
    half = 0.0
    for x in (0.1, 0.5, 1.0, math.pi / 2, 5.0, 12.5, 20.0, 40.0):
        k = math.sqrt(2 / (math.pi * x))
        half = max(half, abs(bessel_j(0.5, x) - k * math.sin(x)), abs(bessel_j(-0.5, x) - k * math.cos(x)),
                   abs(bessel_j(1.5, x) - k * (math.sin(x) / x - math.cos(x))))
    limit = abs(fresnel_e(50.0) - FRESNEL_LIMIT)
    oracle = max(abs(fresnel_e(x) - mp_fresnel(x)) for x in (0.5, 1.0, 2.0, 3.0, 5.0))
    ok = ja <= 1e-9 and half <= 1e-11 and limit <= 1e-3 and oracle <= 1e-10
    # |E(50) - limit| is about 1/(2*50) = 0.01 for the exact integral; see the README
    assert report(9, "special-function substrate", ok,
                  f"Jacobi-Anger {ja:.3e} (tol 1e-9), half-order Bessel {half:.3e} (tol 1e-11), "
                  f"|E(50) - limit| {limit:.3e} (tol 1e-3), Fresnel vs quadrature oracle {oracle:.3e} (tol 1e-10)")


def test_criterion_10_cli_contract(tmp_path, capsys):
    ok_corrected = cli_main(["compare", "--alpha", "0.5", "--method-a", "series", "--method-b", "closed"]) == 0
    fails_original = cli_main(["compare", "--alpha", "0.5", "--method-a", "series", "--method-b", "ab-original"]) == 1

    csv_path = tmp_path / "g.csv"
    cli_main(["grid", "--alpha", "0.3", "--out", str(csv_path), "--no-timestamp"])
    text = csv_path.read_text()
    round_trip = FieldGrid.from_csv(text).to_csv() == text

    outputs = []
    for i, fmt in enumerate(("csv", "csv", "json", "json")):
        path = tmp_path / f"d{i}.{fmt}"
        cli_main(["grid", "--alpha", "1.5", "--format", fmt, "--out", str(path), "--no-timestamp"])
        outputs.append(path.read_bytes())
    deterministic = outputs[0] == outputs[1] and outputs[2] == outputs[3]
    capsys.readouterr()

    ok = ok_corrected and fails_original and round_trip and deterministic
    assert report(10, "CLI contract", ok,
                  f"compare corrected exit 0: {ok_corrected}, compare original exit 1: {fails_original}, "
                  f"CSV round trip: {round_trip}, deterministic output: {deterministic}")

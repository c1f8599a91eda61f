"""Command-line front end.

Exit codes: 0 success/PASS, 1 tolerance FAIL, 2 usage or precondition error,
3 numerical non-convergence, 4 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from . import laplace
from .eigenfunctions import METHODS, EvalPoint, FluxParameter, evaluate
from .errors import ConvergenceError, DomainError, PreconditionError
from .fieldgrid import FieldGrid, axis, evaluate_grid, fmt
from .propagator import STRATEGIES, PropagatorParams, SpacetimePoint, free_propagator_2d, propagator_K
from .special import SeriesConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONVERGENCE, EXIT_IO = 0, 1, 2, 3, 4

DEFAULT_SV_THETAS = "0.1,1,2,3,5"


def _print_value(v: complex, out=None, label: str = "") -> None:
    out = sys.stdout if out is None else out
    for name, x in (("re", v.real + 0.0), ("im", v.imag + 0.0), ("abs", abs(v)), ("arg", cmath.phase(v))):
        print(f"{label}{name:<4}{x:.15g}", file=out)


def _cfg(args) -> SeriesConfig:
    return SeriesConfig(abs_tol=args.series_tol)


def _grid_axes(args) -> tuple[list[float], list[float]]:
    rhos = axis(args.rho_min, args.rho_max, args.rho_count, endpoint=True)
    thetas = axis(args.theta_min, args.theta_max, args.theta_count, endpoint=args.theta_endpoint)
    if any(r < 0 for r in rhos):
        raise PreconditionError("--rho-min must be >= 0")
    return rhos, thetas


def cmd_eval(args) -> int:
    v = evaluate(args.method, FluxParameter(args.alpha), EvalPoint(args.rho, args.theta), _cfg(args))
    _print_value(v)
    return EXIT_OK


def cmd_grid(args) -> int:
    rhos, thetas = _grid_axes(args)
    grid = evaluate_grid(args.alpha, rhos, thetas, args.method, _cfg(args),
                         workers=args.workers, timestamp=not args.no_timestamp)
    text = grid.to_csv() if args.format == "csv" else grid.to_json()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def compare_grids(a: FieldGrid, b: FieldGrid, ratio: bool = False) -> dict:
    """Pointwise |a - b| summary; optionally the complex ratio a/b where sgn(cos(theta/2)) > 0."""
    diffs = []
    worst = (0.0, None, None)
    ratios = []
    for (rho, theta, va), (_, _, vb) in zip(a.points(), b.points()):
        d = abs(va - vb)
        diffs.append({"rho": rho, "theta": theta, "abs_diff": d})
        if worst[1] is None or d > worst[0]:
            worst = (d, rho, theta)
        if ratio and math.cos(0.5 * theta) > 0 and abs(vb) > 1e-12:
            ratios.append(va / vb)
    report = {
        "points": diffs,
        "max_abs_diff": max(x["abs_diff"] for x in diffs),
        "mean_abs_diff": sum(x["abs_diff"] for x in diffs) / len(diffs),
        "worst_point": [worst[1], worst[2]],
    }
    if ratio and ratios:
        mean = sum(ratios) / len(ratios)
        spread = max(abs(r - mean) for r in ratios)
        report["ratio_summary"] = {
            "samples": len(ratios),
            "mean": [mean.real, mean.imag],
            "mean_abs": abs(mean),
            "dispersion": spread,
            "theta_independent": spread <= 1e-8 * max(1.0, abs(mean)),
        }
    return report


def cmd_compare(args) -> int:
    rhos, thetas = _grid_axes(args)
    cfg = _cfg(args)
    ga = evaluate_grid(args.alpha, rhos, thetas, args.method_a, cfg, workers=args.workers, timestamp=False)
    gb = evaluate_grid(args.alpha, rhos, thetas, args.method_b, cfg, workers=args.workers, timestamp=False)
    want_ratio = {args.method_a, args.method_b} == {"ab-original", "closed"}
    report = compare_grids(ga, gb, ratio=want_ratio)
    passed = report["max_abs_diff"] <= args.tol
    print(f"alpha         {args.alpha:.15g}")
    print(f"methods       {args.method_a} vs {args.method_b}")
    print(f"points        {len(report['points'])}")
    print(f"max_abs_diff  {report['max_abs_diff']:.6e}")
    print(f"mean_abs_diff {report['mean_abs_diff']:.6e}")
    print(f"worst_point   rho={report['worst_point'][0]:.15g} theta={report['worst_point'][1]:.15g}")
    rs = report.get("ratio_summary")
    if rs:
        print(f"ratio {args.method_a}/{args.method_b} over sgn(cos(theta/2)) > 0: "
              f"mean={rs['mean'][0]:.15g}{rs['mean'][1]:+.15g}i |mean|={rs['mean_abs']:.15g} "
              f"dispersion={rs['dispersion']:.3e} theta_independent={rs['theta_independent']}")
    print(f"{'PASS' if passed else 'FAIL'} (tol {args.tol:g})")
    if args.json_out:
        report.update(alpha=args.alpha, method_a=args.method_a, method_b=args.method_b,
                      tolerance=args.tol, passed=passed)
        with open(args.json_out, "w") as fh:
            json.dump(report, fh, indent=1)
            fh.write("\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_singlevalued(args) -> int:
    flux = FluxParameter(args.alpha)
    cfg = _cfg(args)
    thetas = [float(t) for t in args.theta.split(",") if t.strip()]
    ok = True
    print(f"{'theta':>22} {'|F(theta+2pi)-F(theta)|':>24}" + ("  multiplier" if args.method == "ab-original" else ""))
    for th in thetas:
        f0 = evaluate(args.method, flux, EvalPoint(args.rho, th), cfg)
        f1 = evaluate(args.method, flux, EvalPoint(args.rho, th + 2.0 * math.pi), cfg)
        d = abs(f1 - f0)
        ok &= d <= args.tol
        line = f"{th:>22.15g} {d:>24.6e}"
        if args.method == "ab-original":
            mult = f1 / f0 if f0 != 0 else complex("nan")
            line += f"  {mult.real:.12g}{mult.imag:+.3e}i"
        print(line)
    print(f"{'PASS' if ok else 'FAIL'} (tol {args.tol:g})")
    return EXIT_OK if ok else EXIT_FAIL


def _load_probes(path: str) -> list[complex]:
    """Probe file: JSON list whose entries are numbers, [re, im] pairs or strings like "1+2j"."""
    with open(path) as fh:
        raw = json.load(fh)
    if isinstance(raw, dict):
        raw = raw.get("s", [])
    out = []
    for item in raw:
        if isinstance(item, (list, tuple)):
            s = complex(float(item[0]), float(item[1]))
        elif isinstance(item, str):
            s = complex(item.replace(" ", ""))
        else:
            s = complex(item)
        if not s.real > 0:
            raise DomainError(f"probe s={s} violates the Laplace-transform requirement Re[s] > 0")
        out.append(s)
    return out


def cmd_laplace_report(args) -> int:
    if args.identity != "all" and args.identity not in laplace.IDENTITIES:
        raise PreconditionError(
            f"unknown --identity {args.identity!r}; choose from {', '.join(laplace.IDENTITIES)} or 'all'")
    s_values = _load_probes(args.probes) if args.probes else None
    if args.identity == "all":
        reports = laplace.run_all(s_values)
    else:
        reports = laplace.run_identity(args.identity, s_values)
    for r in reports:
        params = " ".join(f"{k}={v:.6g}" if not isinstance(v, complex) else f"{k}={v.real:g}{v.imag:+g}j"
                          for k, v in r.params.items())
        print(f"{r.identity_id:<15} {params:<40} abs_err={r.abs_err:.3e} "
              f"tol={r.tolerance:.0e} {'PASS' if r.passed else 'FAIL'}")
    all_ok = all(r.passed for r in reports)
    print(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=1)
            fh.write("\n")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_propagator(args) -> int:
    flux = FluxParameter(args.alpha)
    params = PropagatorParams(args.tau, flux)
    pts = SpacetimePoint(args.r, args.theta, args.r_prime, args.theta_prime)
    k = propagator_K(params, pts, args.strategy, _cfg(args))
    _print_value(k)
    if args.check_free:
        if not args.alpha == 0:
            raise PreconditionError("--check-free applies to --alpha 0 only")
        residual = abs(k - free_propagator_2d(args.tau, pts))
        print(f"free_residual {residual:.6e}")
    return EXIT_OK


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rho-min", type=float, default=0.1)
    p.add_argument("--rho-max", type=float, default=20.0)
    p.add_argument("--rho-count", type=int, default=4)
    p.add_argument("--theta-min", type=float, default=0.0)
    p.add_argument("--theta-max", type=float, default=4.0 * math.pi)
    p.add_argument("--theta-count", type=int, default=16)
    p.add_argument("--theta-endpoint", action="store_true",
                   help="include --theta-max in the theta axis (default: half-open)")
    p.add_argument("--workers", type=int, default=1, help="worker processes for grid evaluation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abflux",
                                     description="Aharonov-Bohm eigenfunctions, propagator and identity checks.")
    parser.add_argument("--series-tol", type=float, default=1e-14,
                        help="absolute truncation tolerance for the Bessel series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate F_alpha at one point")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--method", choices=METHODS, default="series")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="write F_alpha on a (rho, theta) grid as CSV or JSON")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--method", choices=METHODS, default="series")
    _add_grid_flags(p)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp so output is byte-reproducible")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("compare", help="compare two evaluation methods over a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--method-a", choices=METHODS, default="series")
    p.add_argument("--method-b", choices=METHODS, default="closed")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json-out", default=None)
    _add_grid_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("singlevalued", help="check F(rho, theta + 2 pi) == F(rho, theta)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--rho", type=float, default=3.0)
    p.add_argument("--theta", default=DEFAULT_SV_THETAS, help="comma-separated theta samples")
    p.add_argument("--method", choices=METHODS, default="series")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_singlevalued)

    p = sub.add_parser("laplace-report", help="verify the Laplace-transform identities by quadrature")
    p.add_argument("--identity", default="all", help=f"one of {', '.join(laplace.IDENTITIES)} or 'all'")
    p.add_argument("--probes", default=None, help="JSON file with a list of s values")
    p.add_argument("--out", default=None, help="write the reports as JSON")
    p.set_defaults(func=cmd_laplace_report)

    p = sub.add_parser("propagator", help="evaluate the propagator K")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--r-prime", type=float, required=True)
    p.add_argument("--theta-prime", type=float, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="closed_auto")
    p.add_argument("--check-free", action="store_true", help="at alpha=0, print the residual against the free kernel")
    p.set_defaults(func=cmd_propagator)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

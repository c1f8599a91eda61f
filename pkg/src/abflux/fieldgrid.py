"""Rectangular (rho, theta) sample grids and their CSV/JSON encodings.

CSV layout, one row per sample in (rho index, theta index) order::

    rho,theta,re,im,abs,phase

Floats are written with 17 significant digits, which round-trips every
IEEE double exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import partial

from .eigenfunctions import EvalPoint, FluxParameter, evaluate
from .special import DEFAULT_CONFIG, SeriesConfig

CSV_HEADER = ("rho", "theta", "re", "im", "abs", "phase")


def fmt(x: float) -> str:
    return format(x, ".17g")


def axis(lo: float, hi: float, count: int, endpoint: bool = True) -> list[float]:
    """``count`` evenly spaced values from ``lo`` to ``hi`` (``hi`` excluded unless ``endpoint``)."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count == 1:
        return [float(lo)]
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    div = count - 1 if endpoint else count
    step = (hi - lo) / div
    return [lo + i * step for i in range(count)]


@dataclass
class FieldGrid:
    rho_values: list[float]
    theta_values: list[float]
    samples: list[list[complex]]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.samples) != len(self.rho_values):
            raise ValueError("samples must have one row per rho value")
        for row in self.samples:
            if len(row) != len(self.theta_values):
                raise ValueError("each sample row must have one entry per theta value")
            if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in row):
                raise ValueError("grid samples must be finite")

    def points(self):
        for i, rho in enumerate(self.rho_values):
            for j, theta in enumerate(self.theta_values):
                yield rho, theta, self.samples[i][j]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rho, theta, v in self.points():
            writer.writerow([fmt(rho), fmt(theta), fmt(v.real), fmt(v.imag),
                             fmt(abs(v)), fmt(math.atan2(v.imag, v.real))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, meta: dict | None = None) -> "FieldGrid":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        rhos: list[float] = []
        thetas: list[float] = []
        rows: dict[float, list[complex]] = {}
        for rec in reader:
            rho, theta, re, im = (float(x) for x in rec[:4])
            if rho not in rows:
                rhos.append(rho)
                rows[rho] = []
            if len(rhos) == 1:
                thetas.append(theta)
            rows[rho].append(complex(re, im))
        return cls(rhos, thetas, [rows[r] for r in rhos], dict(meta or {}))

    def to_json(self) -> str:
        doc = {
            "meta": self.meta,
            "rho": self.rho_values,
            "theta": self.theta_values,
            "re": [[v.real for v in row] for row in self.samples],
            "im": [[v.imag for v in row] for row in self.samples],
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FieldGrid":
        doc = json.loads(text)
        samples = [[complex(a, b) for a, b in zip(ra, ia)] for ra, ia in zip(doc["re"], doc["im"])]
        return cls(doc["rho"], doc["theta"], samples, doc.get("meta", {}))


def _row(rho: float, thetas: list[float], alpha: float, method: str, cfg: SeriesConfig) -> list[complex]:
    flux = FluxParameter(alpha)
    return [evaluate(method, flux, EvalPoint(rho, th), cfg) for th in thetas]


def evaluate_grid(alpha: float, rho_values: list[float], theta_values: list[float], method: str,
                  cfg: SeriesConfig = DEFAULT_CONFIG, *, workers: int = 1,
                  timestamp: bool = True) -> FieldGrid:
    """Fill a grid with F_alpha by ``method``; rows may be spread over worker processes."""
    job = partial(_row, thetas=list(theta_values), alpha=alpha, method=method, cfg=cfg)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map() yields in submission order, so the file layout never depends on scheduling
            samples = list(pool.map(job, rho_values))
    else:
        samples = [job(rho) for rho in rho_values]
    meta = {
        "alpha": alpha,
        "method": method,
        "tolerance": cfg.abs_tol,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None,
    }
    return FieldGrid(list(rho_values), list(theta_values), samples, meta)

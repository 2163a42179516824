"""Fit distribution factors to empirical perceived-credit shares.

The objective is a lack-of-fit score: the squared deviation between
empirical and model shares, standardized by the model share and averaged
over n-1 observations. The factor is chosen by exhaustive grid search;
grid points where the model predicts a zero share (d = 1 puts the last
author at exactly zero) are treated as infinitely bad rather than
undefined.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .credit import credit_shares


def lack_of_fit(empirical: Sequence[float], model: Sequence[float]) -> float:
    """(1/(n-1)) * sum (E-C)^2 / C over paired share lists."""
    if len(empirical) != len(model):
        raise ValueError(
            f"share lists must have equal length, got {len(empirical)} and {len(model)}"
        )
    n = len(empirical)
    if n < 2:
        raise ValueError("lack of fit needs at least two observations")
    if any(c == 0 for c in model):
        raise ValueError("model shares must be nonzero")
    return sum((e - c) ** 2 / c for e, c in zip(empirical, model)) / (n - 1)


@dataclass(frozen=True)
class FitResult:
    n_authors: int
    best_d: float
    lof: float
    model_shares: tuple[float, ...]


def grid_points(grid_step: float) -> list[float]:
    """The grid {0, step, 2*step, ...} capped at 1.0 inclusive."""
    if not 0 < grid_step <= 0.1:
        raise ValueError(f"grid step must be in (0, 0.1], got {grid_step!r}")
    points = []
    i = 0
    while True:
        d = i * grid_step
        if d >= 1.0 - 1e-12:
            points.append(1.0)
            return points
        points.append(d)
        i += 1


def fit_distribution_factor(
    n_authors: int, empirical: Sequence[float], grid_step: float = 0.001
) -> FitResult:
    """Grid-search the factor minimizing lack of fit; ties go to smaller d."""
    if len(empirical) != n_authors:
        raise ValueError(
            f"empirical shares for {n_authors} authors must have length {n_authors}"
        )
    best_d = None
    best_lof = math.inf
    best_shares: tuple[float, ...] = ()
    for d in grid_points(grid_step):
        shares = credit_shares(n_authors, d)
        if min(shares) == 0:
            continue
        lof = lack_of_fit(empirical, shares)
        if lof < best_lof:
            best_d, best_lof, best_shares = d, lof, shares
    if best_d is None:
        raise ValueError("no admissible grid point")
    return FitResult(n_authors=n_authors, best_d=best_d, lof=best_lof, model_shares=best_shares)


def validate_share_table(table: dict[int, Sequence[float]]) -> dict[int, tuple[float, ...]]:
    """Check an empirical share table: length N lists, entries in (0,1),
    sums within 0.02 of one (survey rounding tolerated)."""
    cleaned: dict[int, tuple[float, ...]] = {}
    for n, shares in sorted(table.items()):
        shares = tuple(float(s) for s in shares)
        if len(shares) != n:
            raise ValueError(f"share list for {n} coauthors must have length {n}")
        if any(not 0 < s < 1 for s in shares):
            raise ValueError(f"share entries for {n} coauthors must lie in (0, 1)")
        if abs(sum(shares) - 1.0) > 0.02:
            raise ValueError(f"share list for {n} coauthors sums to {sum(shares):.4f}")
        cleaned[int(n)] = shares
    return cleaned


def load_share_table(path) -> dict[int, tuple[float, ...]]:
    """Read a JSON map of coauthor count (string key) to share array."""
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, dict):
        raise ValueError("empirical shares file must be a JSON object")
    try:
        table = {int(k): v for k, v in raw.items()}
    except (TypeError, ValueError) as exc:
        raise ValueError(f"share table keys must be coauthor counts: {exc}") from exc
    return validate_share_table(table)

"""Fractional ranking, Kendall rank correlation, and roster matching.

Tau-b carries the tie corrections in both the coefficient and the
variance of its normal approximation; the plain (tau-a) variant is kept
for comparison. The concordant-minus-discordant count comes from a
merge-sort inversion count, not from pairwise enumeration, so the O(g^2)
pair-counting oracle in the test suite is an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .measures import ScoreVector


@dataclass(frozen=True)
class RankVector:
    """Fractional ranks, 1 = best; tied scores share the mean position."""

    measure: str
    nodes: tuple[str, ...]
    ranks: tuple[float, ...]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.nodes, self.ranks))


def _values(scores) -> list[float]:
    if isinstance(scores, ScoreVector):
        return list(scores.values)
    return [float(v) for v in scores]


def fractional_rank_values(values: Sequence[float]) -> list[float]:
    """Descending-score ranks with average-rank ties."""
    values = list(values)
    g = len(values)
    order = sorted(range(g), key=lambda i: (-values[i], i))
    ranks = [0.0] * g
    i = 0
    while i < g:
        j = i
        while j < g and values[order[j]] == values[order[i]]:
            j += 1
        mean_rank = (i + 1 + j) / 2.0
        for k in range(i, j):
            ranks[order[k]] = mean_rank
        i = j
    return ranks


def fractional_ranks(scores: ScoreVector) -> RankVector:
    return RankVector(scores.measure, scores.nodes, tuple(fractional_rank_values(scores.values)))


@dataclass(frozen=True)
class TauResult:
    tau: float
    z: float


def _count_inversions(values: list[float]) -> int:
    """Strict inversions (i < j with values[i] > values[j]) by merge sort."""
    n = len(values)
    src = list(values)
    buf = [0.0] * n
    count = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    count += mid - i
                    buf[k] = src[j]
                    j += 1
                else:
                    buf[k] = src[i]
                    i += 1
                k += 1
            buf[k : k + mid - i] = src[i:mid]
            k += mid - i
            buf[k : k + hi - j] = src[j:hi]
        src, buf = buf, src
        width *= 2
    return count


def _tie_stats(sorted_values: list[float]) -> tuple[int, float, float]:
    """(sum t(t-1)/2, sum t(t-1)(2t+5), sum t(t-1)(t-2)) over tie groups."""
    pairs = 0
    v_correction = 0.0
    triples = 0.0
    i = 0
    n = len(sorted_values)
    while i < n:
        j = i
        while j < n and sorted_values[j] == sorted_values[i]:
            j += 1
        t = j - i
        pairs += t * (t - 1) // 2
        v_correction += t * (t - 1) * (2 * t + 5)
        triples += t * (t - 1) * (t - 2)
        i = j
    return pairs, v_correction, triples


def _pair_counts(x: list[float], y: list[float]):
    n = len(x)
    order = sorted(range(n), key=lambda i: (x[i], y[i]))
    xs = [x[i] for i in order]
    ys = [y[i] for i in order]
    xtie, _, _ = _tie_stats(xs)
    xytie, _, _ = _tie_stats([(xs[i], ys[i]) for i in range(n)])  # type: ignore[list-item]
    discordant = _count_inversions(ys)
    ytie, _, _ = _tie_stats(sorted(y))
    total = n * (n - 1) // 2
    con_minus_dis = total - xtie - ytie + xytie - 2 * discordant
    return total, xtie, ytie, con_minus_dis


def kendall_tau_b(x, y) -> TauResult:
    """Tie-corrected Kendall correlation with its normal-approximation z.

    Returns NaN for both fields when either vector is entirely tied
    (the denominator vanishes).
    """
    x, y = _values(x), _values(y)
    if len(x) != len(y):
        raise ValueError(f"vectors must have equal length, got {len(x)} and {len(y)}")
    n = len(x)
    if n < 2:
        raise ValueError("rank correlation needs at least two observations")
    total, xtie, ytie, con_minus_dis = _pair_counts(x, y)
    if total == xtie or total == ytie:
        return TauResult(math.nan, math.nan)
    tau = con_minus_dis / math.sqrt(float(total - xtie) * float(total - ytie))

    _, vt, t3x = _tie_stats(sorted(x))
    _, vu, t3y = _tie_stats(sorted(y))
    t1x = 2.0 * xtie  # sum t(t-1) over tie groups
    t1y = 2.0 * ytie
    var = (n * (n - 1) * (2 * n + 5) - vt - vu) / 18.0
    var += t1x * t1y / (2.0 * n * (n - 1))
    if n > 2:
        var += t3x * t3y / (9.0 * n * (n - 1) * (n - 2))
    z = con_minus_dis / math.sqrt(var) if var > 0 else math.nan
    return TauResult(tau, z)


def kendall_tau_a(x, y) -> TauResult:
    """Uncorrected variant: (C - D) / (g(g-1)/2)."""
    x, y = _values(x), _values(y)
    if len(x) != len(y):
        raise ValueError(f"vectors must have equal length, got {len(x)} and {len(y)}")
    n = len(x)
    if n < 2:
        raise ValueError("rank correlation needs at least two observations")
    total, _, _, con_minus_dis = _pair_counts(x, y)
    tau = con_minus_dis / total
    var = n * (n - 1) * (2 * n + 5) / 18.0
    z = con_minus_dis / math.sqrt(var) if var > 0 else math.nan
    return TauResult(tau, z)


@dataclass(frozen=True)
class RosterMatch:
    matched: frozenset[str]
    count: int
    k: int


def top_k_group(scores: ScoreVector, k: int) -> frozenset[str]:
    """All nodes scoring at least the k-th best score (tie-inclusive)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(scores) == 0:
        return frozenset()
    by_score = sorted(scores.values, reverse=True)
    threshold = by_score[min(k, len(by_score)) - 1]
    return frozenset(
        node for node, value in zip(scores.nodes, scores.values) if value >= threshold
    )


def roster_match(scores: ScoreVector, roster: set[str], k: int) -> RosterMatch:
    """Intersect the tie-inclusive top-k group with an external roster."""
    matched = top_k_group(scores, k) & set(roster)
    return RosterMatch(matched=frozenset(matched), count=len(matched), k=k)


def parse_roster(lines) -> set[str]:
    """One author key per line; blank lines and # comments ignored."""
    roster = set()
    for line in lines:
        entry = line.strip()
        if entry and not entry.startswith("#"):
            roster.add(entry)
    return roster


def load_roster(path) -> set[str]:
    with open(path, encoding="utf-8") as handle:
        return parse_roster(handle)

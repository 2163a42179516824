"""Per-paper credit allocation for ordered coauthor lists.

Every paper carries one unit of credit. With N coauthors, each author
starts from an initial share of 1/N. A distribution factor d in [0, 1]
fixes the transferable part d/N of that initial share: each author splits
it equally among all authors listed before her, so earlier ranks collect
credit from everyone behind them. The lead author has nobody ahead and
self-allocates her transferable part; the non-transferable remainder
(1-d)/N always stays with its owner as a self-loop.

All quantities are computed from the closed form, never by simulating
sequential transfers, so results are independent of evaluation order.
Ranks are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass


def validate_factor(d: float) -> float:
    """Reject distribution factors outside [0, 1]."""
    d = float(d)
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"distribution factor must be in [0, 1], got {d!r}")
    return d


def _validate_n_authors(n_authors: int) -> int:
    n = int(n_authors)
    if n < 1:
        raise ValueError(f"a paper needs at least one author, got {n_authors!r}")
    return n


def credit_shares(n_authors: int, d: float) -> tuple[float, ...]:
    """Final credit share per author rank, in byline order.

    share(r) = (1-d)/N + [r == 1] * d/N + sum over later ranks k of
    d / (N * (k-1)). Shares sum to one and are non-increasing in rank;
    a sole author keeps the full unit regardless of d.
    """
    n = _validate_n_authors(n_authors)
    d = validate_factor(d)
    nc = (1.0 - d) / n
    shares = []
    for r in range(1, n + 1):
        s = nc
        if r == 1:
            s += d / n
        for k in range(r + 1, n + 1):
            s += d / (n * (k - 1))
        shares.append(s)
    return tuple(shares)


@dataclass(frozen=True)
class PaperTransferDecomposition:
    """The directed-edge view of one paper's credit allocation.

    ``transfers`` holds (sender rank, receiver rank, weight) triples with
    receiver < sender; every rank s >= 2 emits exactly s-1 entries of
    equal weight d / (N * (s-1)). ``nc`` are the per-rank non-transferable
    self-loops, ``first_author_self`` the rank-1 self-allocated
    transferable part. The three pieces together sum to one.
    """

    n_authors: int
    nc: tuple[float, ...]
    first_author_self: float
    transfers: tuple[tuple[int, int, float], ...]

    def total(self) -> float:
        """Total credit in the decomposition (one per paper)."""
        return sum(self.nc) + self.first_author_self + sum(w for _, _, w in self.transfers)

    def receiver_totals(self) -> tuple[float, ...]:
        """Credit received per rank; reproduces credit_shares."""
        totals = list(self.nc)
        totals[0] += self.first_author_self
        for _, receiver, weight in self.transfers:
            totals[receiver - 1] += weight
        return tuple(totals)


def paper_transfer_decomposition(n_authors: int, d: float) -> PaperTransferDecomposition:
    """Decompose one paper into self-loops and pairwise transfers."""
    n = _validate_n_authors(n_authors)
    d = validate_factor(d)
    nc = tuple([(1.0 - d) / n] * n)
    transfers = []
    for sender in range(2, n + 1):
        weight = d / (n * (sender - 1))
        for receiver in range(1, sender):
            transfers.append((sender, receiver, weight))
    return PaperTransferDecomposition(
        n_authors=n,
        nc=nc,
        first_author_self=d / n,
        transfers=tuple(transfers),
    )


@dataclass
class DistributionPolicy:
    """Distribution factor per coauthor count, with clamping fallback.

    ``factors`` maps coauthor count N (>= 2) to a factor in [0, 1].
    Counts above the largest configured key reuse the largest key's
    factor; counts below the smallest key (including single-authored
    papers, whose total share is 1.0 regardless) reuse the smallest
    key's factor.
    """

    factors: dict[int, float]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("distribution policy needs at least one coauthor-count entry")
        cleaned: dict[int, float] = {}
        for key, value in self.factors.items():
            n = int(key)
            if n < 2:
                raise ValueError(f"factor keys are coauthor counts >= 2, got {key!r}")
            cleaned[n] = validate_factor(value)
        self.factors = dict(sorted(cleaned.items()))

    def factor_for(self, n_authors: int) -> float:
        n = _validate_n_authors(n_authors)
        if n in self.factors:
            return self.factors[n]
        keys = list(self.factors)
        if n > keys[-1]:
            return self.factors[keys[-1]]
        return self.factors[keys[0]]


def default_policy() -> DistributionPolicy:
    """Factors fitted against the bundled perceived-share survey data."""
    return DistributionPolicy({2: 0.21, 3: 0.33, 4: 0.39})

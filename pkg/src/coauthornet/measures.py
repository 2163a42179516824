"""Prominence measures: degree, betweenness, closeness, indegree prestige.

Degree, betweenness and closeness operate on the symmetrized binary
network with unit edge lengths. Closeness is the harmonic form (sum of
reciprocal distances, unreachable pairs contribute zero) so it stays
well-defined on disconnected networks. Betweenness is unnormalized with
no endpoint inclusion, accumulated per source with Brandes' algorithm.

Indegree prestige reads the directed network: by default it includes the
self-loops, making it an author's total accumulated coauthorship credit;
the exclusive variant counts incoming transfers only.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .network import DirectedCreditNetwork, UndirectedBinaryNetwork


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores aligned to the network node index."""

    measure: str
    nodes: tuple[str, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.values):
            raise ValueError("scores must align with nodes")
        for v in self.values:
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"scores must be finite and >= 0, got {v!r}")

    def __len__(self) -> int:
        return len(self.nodes)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.nodes, self.values))

    def score_of(self, key: str) -> float:
        return self.values[self.nodes.index(key)]


def degree_centrality(net: UndirectedBinaryNetwork) -> ScoreVector:
    """Number of distinct neighbors per node."""
    return ScoreVector(
        "degree", net.nodes, tuple(float(len(nbrs)) for nbrs in net.adjacency)
    )


def harmonic_closeness(net: UndirectedBinaryNetwork) -> ScoreVector:
    """Sum over other nodes of 1/distance, with 1/infinity = 0."""
    values = []
    for source in range(net.n_nodes):
        dist = _bfs_distances(net, source)
        values.append(sum(1.0 / d for d in dist.values() if d > 0))
    return ScoreVector("closeness", net.nodes, tuple(values))


def _bfs_distances(net: UndirectedBinaryNetwork, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in net.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def betweenness_centrality(net: UndirectedBinaryNetwork) -> ScoreVector:
    """Brandes accumulation; each unordered pair counted once."""
    g = net.n_nodes
    scores = [0.0] * g
    for source in range(g):
        # BFS phase: geodesic counts and predecessor lists.
        dist = [-1] * g
        sigma = [0.0] * g
        preds: list[list[int]] = [[] for _ in range(g)]
        dist[source] = 0
        sigma[source] = 1.0
        queue = deque([source])
        stack: list[int] = []
        while queue:
            u = queue.popleft()
            stack.append(u)
            for v in net.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        # Dependency accumulation in reverse BFS order.
        delta = [0.0] * g
        while stack:
            w = stack.pop()
            for u in preds[w]:
                delta[u] += (sigma[u] / sigma[w]) * (1.0 + delta[w])
            if w != source:
                scores[w] += delta[w]
    # Each unordered pair was visited from both endpoints.
    return ScoreVector("betweenness", net.nodes, tuple(s / 2.0 for s in scores))


def indegree_prestige(net: DirectedCreditNetwork, include_self: bool = True) -> ScoreVector:
    """Accumulated incoming credit per author.

    With ``include_self`` (default) the score adds both self-loop kinds
    to the incoming transfers, i.e. the author's total accumulated
    credit; without it, incoming transfers only.
    """
    values = net.incoming_transfer_totals()
    if include_self:
        values = [
            v + nc + fs for v, nc, fs in zip(values, net.nc_self, net.first_self)
        ]
    return ScoreVector("indegree", net.nodes, tuple(values))

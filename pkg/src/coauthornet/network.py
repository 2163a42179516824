"""Corpus-level credit network: accumulation, symmetrization, components.

The directed network keeps the two kinds of self-loop separate
(non-transferable credit vs. the lead author's self-allocated
transferable part) because downstream block matrices report them
separately. Accumulation follows corpus order, so rebuilding from the
same corpus is byte-reproducible.

The symmetrized view is binary: an undirected edge records that a pair
co-occurred on at least one included paper, deliberately ignoring both
direction and frequency.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .corpus import BibRecord, OrderingPolicy, apply_author_ordering
from .credit import DistributionPolicy, paper_transfer_decomposition


@dataclass
class DirectedCreditNetwork:
    """Accumulated directed, weighted, self-looped credit network.

    ``transfers`` maps (sender index, receiver index) to accumulated
    weight, sender != receiver. ``nc_self`` and ``first_self`` are the
    accumulated self-loop values per node. Treat instances as immutable
    once built.
    """

    nodes: tuple[str, ...]
    nc_self: tuple[float, ...]
    first_self: tuple[float, ...]
    transfers: dict[tuple[int, int], float]
    paper_count: int
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {key: i for i, key in enumerate(self.nodes)}

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    def node_index(self, key: str) -> int:
        return self._index[key]

    def total_credit(self) -> float:
        """Sum of every weight in the network; equals paper_count."""
        return sum(self.nc_self) + sum(self.first_self) + sum(self.transfers.values())

    def incoming_transfer_totals(self) -> list[float]:
        totals = [0.0] * self.n_nodes
        for (_, receiver), weight in sorted(self.transfers.items()):
            totals[receiver] += weight
        return totals

    def to_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "nc_self": list(self.nc_self),
            "first_self": list(self.first_self),
            "transfers": [
                {"from": s, "to": t, "weight": w}
                for (s, t), w in sorted(self.transfers.items())
            ],
            "paper_count": self.paper_count,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "DirectedCreditNetwork":
        nodes = tuple(raw["nodes"])
        transfers = {
            (int(e["from"]), int(e["to"])): float(e["weight"]) for e in raw["transfers"]
        }
        net = cls(
            nodes=nodes,
            nc_self=tuple(float(v) for v in raw["nc_self"]),
            first_self=tuple(float(v) for v in raw["first_self"]),
            transfers=transfers,
            paper_count=int(raw["paper_count"]),
        )
        if len(net.nc_self) != len(nodes) or len(net.first_self) != len(nodes):
            raise ValueError("self-loop arrays must match the node count")
        return net


@dataclass(frozen=True)
class UndirectedBinaryNetwork:
    """Symmetric binary adjacency over the same node index space."""

    nodes: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2


def undirected_from_edges(
    nodes: Iterable[str], edges: Iterable[tuple[str, str]]
) -> UndirectedBinaryNetwork:
    """Convenience constructor; self-loops and duplicate edges collapse."""
    node_list = tuple(nodes)
    index = {key: i for i, key in enumerate(node_list)}
    adj: list[set[int]] = [set() for _ in node_list]
    for a, b in edges:
        if a == b:
            continue
        i, j = index[a], index[b]
        adj[i].add(j)
        adj[j].add(i)
    return UndirectedBinaryNetwork(node_list, tuple(frozenset(s) for s in adj))


def build_directed_network(
    corpus: Iterable[BibRecord],
    policy: OrderingPolicy = OrderingPolicy.CORRESPONDING_FIRST,
    factors: DistributionPolicy | None = None,
    include_singles: bool = False,
) -> DirectedCreditNetwork:
    """Accumulate per-paper transfer decompositions over the corpus.

    For each included paper the authors are reordered by ``policy``, the
    factor is picked by coauthor count (clamped to the nearest configured
    key outside the configured range), and the decomposition is added
    cell-wise in corpus order. Single-authored papers are skipped unless
    ``include_singles``.
    """
    if factors is None:
        from .credit import default_policy

        factors = default_policy()
    nodes: list[str] = []
    index: dict[str, int] = {}
    nc_self: list[float] = []
    first_self: list[float] = []
    transfers: dict[tuple[int, int], float] = {}
    paper_count = 0

    for record in corpus:
        if record.n_authors < 2 and not include_singles:
            continue
        authors = apply_author_ordering(record, policy)
        for key in authors:
            if key not in index:
                index[key] = len(nodes)
                nodes.append(key)
                nc_self.append(0.0)
                first_self.append(0.0)
        d = factors.factor_for(record.n_authors)
        decomp = paper_transfer_decomposition(record.n_authors, d)
        ids = [index[key] for key in authors]
        for rank, value in enumerate(decomp.nc, start=1):
            nc_self[ids[rank - 1]] += value
        first_self[ids[0]] += decomp.first_author_self
        for sender, receiver, weight in decomp.transfers:
            edge = (ids[sender - 1], ids[receiver - 1])
            transfers[edge] = transfers.get(edge, 0.0) + weight
        paper_count += 1

    return DirectedCreditNetwork(
        nodes=tuple(nodes),
        nc_self=tuple(nc_self),
        first_self=tuple(first_self),
        transfers=transfers,
        paper_count=paper_count,
    )


def symmetrize(net: DirectedCreditNetwork) -> UndirectedBinaryNetwork:
    """Binary undirected view: an edge wherever any transfer exists."""
    adj: list[set[int]] = [set() for _ in net.nodes]
    for (sender, receiver), weight in net.transfers.items():
        if sender != receiver and weight > 0:
            adj[sender].add(receiver)
            adj[receiver].add(sender)
    return UndirectedBinaryNetwork(net.nodes, tuple(frozenset(s) for s in adj))


def connected_components(net: UndirectedBinaryNetwork) -> list[tuple[str, ...]]:
    """Maximal connected node sets, largest first.

    Each component is returned with its keys sorted; components are
    ordered by size descending, then smallest member key ascending.
    """
    seen = [False] * net.n_nodes
    components: list[tuple[str, ...]] = []
    for start in range(net.n_nodes):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for v in net.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        components.append(tuple(sorted(net.nodes[i] for i in members)))
    components.sort(key=lambda c: (-len(c), c[0]))
    return components


def density(net: UndirectedBinaryNetwork) -> float:
    """2m / (g * (g-1)); NaN when the network has fewer than two nodes."""
    g = net.n_nodes
    if g < 2:
        return math.nan
    return 2.0 * net.edge_count / (g * (g - 1))


def save_network(net: DirectedCreditNetwork, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(network_to_json(net))


def network_to_json(net: DirectedCreditNetwork) -> str:
    """Deterministic JSON document; floats round-trip exactly."""
    return json.dumps(net.to_dict(), ensure_ascii=False, indent=2) + "\n"


def load_network(path) -> DirectedCreditNetwork:
    with open(path, encoding="utf-8") as handle:
        return DirectedCreditNetwork.from_dict(json.load(handle))

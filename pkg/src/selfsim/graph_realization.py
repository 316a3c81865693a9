"""Integer degree sequences and their realization as simple graphs.

Pipeline: nominal real degrees -> ``quantize_degrees`` -> ``repair_sequence``
(increment-only, so the head of the ranking is kept) -> ``realize``.
Nodes are 1-indexed in rank order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .distributions import GeometricRankModel, INFINITE
from .errors import NotGraphical, TopDegreeExceedsN, Unrepairable


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if any(d < 0 for d in degrees):
            raise ValueError("degrees must be non-negative")
        if any(x < y for x, y in zip(degrees, degrees[1:])):
            raise ValueError("degree sequence must be non-increasing")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def is_even(self) -> bool:
        return self.total % 2 == 0

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on nodes 1..n; edges stored as sorted (u, v), u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            u, v = min(u, v), max(u, v)
            if not (1 <= u and v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside nodes 1..{self.n}")
            if (u, v) in norm:
                raise ValueError(f"duplicate edge ({u}, {v})")
            norm.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def degrees(self) -> list[int]:
        """Degree of each node, indexed by node id - 1."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists indexed by node id - 1 (neighbours are node ids)."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u - 1].append(v)
            adj[v - 1].append(u)
        return adj


def _as_list(seq) -> list[int]:
    return list(seq.degrees) if isinstance(seq, DegreeSequence) else [int(d) for d in seq]


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def quantize_degrees(model: GeometricRankModel) -> DegreeSequence:
    """Round each nominal degree A*a**-(k-1) half-up and clamp it to [1, N-1]."""
    N = model.N
    if N is INFINITE or N < 2:
        raise ValueError("quantization needs a finite model with N >= 2")
    if model.A > N - 1:
        raise TopDegreeExceedsN(f"top degree {model.A} exceeds N-1 = {N - 1}")
    degrees = [
        min(max(round_half_up(model.A * model.a ** -(k - 1)), 1), N - 1)
        for k in range(1, N + 1)
    ]
    return DegreeSequence(tuple(degrees))


def is_graphical(seq: DegreeSequence | Sequence[int]) -> bool:
    """Erdos-Gallai test: even sum and, for every k,
    sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)."""
    d = sorted(_as_list(seq), reverse=True)
    n = len(d)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    if n and d[0] > n - 1:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def _raise_lowest(d: list[int]) -> None:
    # first index holding the minimum keeps the list non-increasing
    low = d[-1]
    d[d.index(low)] += 1


def repair_sequence(seq: DegreeSequence | Sequence[int]) -> DegreeSequence:
    """Smallest increment-only change that makes ``seq`` graphical.

    Links are added one at a time to the lowest-degree node (the first of
    them, so the order is preserved) until the sequence is graphical. For a
    fixed number of added links this water-filling result is majorized by any
    other increment-only choice, and majorization preserves graphicality, so
    the first graphical result found uses the fewest added links. Graphical
    inputs are returned unchanged.
    """
    d = _as_list(seq)
    DegreeSequence(tuple(d))
    n = len(d)
    if n and (d[0] > n - 1 or d[-1] < 0):
        raise Unrepairable(f"degree {d[0]} cannot be realized on {n} nodes")
    # K_n is graphical, so the loop terminates before any degree exceeds n-1
    while not is_graphical(d):
        _raise_lowest(d)
    return DegreeSequence(tuple(d))


def realize(seq: DegreeSequence | Sequence[int]) -> SimpleGraph:
    """Deterministic Havel-Hakimi realization.

    The node with the smallest positive remaining degree (lowest id among
    ties) is joined to the nodes of largest remaining degree (lowest ids among
    ties). Laying off low-degree nodes onto hubs keeps tree-like sequences
    connected. The degree of node i equals ``seq[i-1]`` exactly.
    """
    d = _as_list(seq)
    if not is_graphical(d):
        raise NotGraphical(f"sequence {d} is not graphical")
    n = len(d)
    rem = list(d)
    edges = []
    while True:
        live = [i for i in range(n) if rem[i] > 0]
        if not live:
            break
        v = min(live, key=lambda i: (rem[i], i))
        others = sorted((i for i in live if i != v), key=lambda i: (-rem[i], i))
        k = rem[v]
        if k > len(others):
            raise NotGraphical(f"sequence {d} is not graphical")
        for u in others[:k]:
            rem[u] -= 1
            edges.append((min(u, v) + 1, max(u, v) + 1))
        rem[v] = 0
    return SimpleGraph(n, tuple(edges))


def degree_sequence(graph: SimpleGraph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(graph.degrees(), reverse=True)))


def graph_from_degrees(degrees: Iterable[int]) -> tuple[DegreeSequence, SimpleGraph]:
    """Repair then realize; returns the realized ("actual") sequence and the graph."""
    actual = repair_sequence(list(degrees))
    return actual, realize(actual)

"""Fitting and diagnostics for rank-ordered degree data."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .distributions import benford_pmf
from .errors import (
    BadRange,
    DegenerateInput,
    Disconnected,
    EmptyInput,
    NonPositive,
    SupportMismatch,
    TooShort,
)
from .graph_realization import SimpleGraph
from .rng import Xoshiro256
from .scaling_solvers import top_count


@dataclass(frozen=True)
class FitResult:
    model: str
    params: dict = field(hash=False)
    goodness: float
    n: int

    def to_record(self) -> dict:
        return {"model": self.model, "parameters": dict(self.params),
                "goodness": self.goodness, "n": self.n}


def _ols(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sxx = np.sum((x - x.mean()) ** 2)
    syy = np.sum((y - y.mean()) ** 2)
    if syy == 0.0:
        raise DegenerateInput("all values are equal")
    slope = np.sum((x - x.mean()) * (y - y.mean())) / sxx
    intercept = y.mean() - slope * x.mean()
    ss_res = np.sum((y - (intercept + slope * x)) ** 2)
    r2 = min(max(1.0 - ss_res / syy, 0.0), 1.0)
    return float(slope), float(intercept), float(r2)


def _check_fit_input(degrees, min_len=3):
    d = [float(v) for v in degrees]
    if len(d) < min_len:
        raise DegenerateInput(f"need at least {min_len} values, got {len(d)}")
    if any(not v > 0 for v in d):
        raise DegenerateInput("degrees must be positive")
    return d


def above_floor(degrees: Sequence[float]) -> list[float]:
    """Drop every entry equal to the minimum (the clamp floor of quantized data).

    Returns the input unchanged when fewer than three entries would remain.
    """
    d = list(degrees)
    low = min(d)
    head = [v for v in d if v > low]
    return head if len(head) >= 3 else d


def fit_geometric(degrees: Sequence[float], exclude_floor: bool = False) -> FitResult:
    """Least squares of ln(degree) on rank-1, giving A = e**intercept, a = e**-slope.

    With ``exclude_floor`` the entries stuck at the minimum value are dropped
    first (see :func:`above_floor`); rounding and clamping distort them most.
    """
    d = _check_fit_input(degrees)
    if exclude_floor:
        d = above_floor(d)
    slope, intercept, r2 = _ols(range(len(d)), np.log(d))
    return FitResult("geometric", {"A": math.exp(intercept), "a": math.exp(-slope)}, r2, len(d))


def fit_power_law(degrees: Sequence[float]) -> FitResult:
    """Least squares of ln(degree) on ln(rank); lambda = -slope."""
    d = _check_fit_input(degrees)
    slope, intercept, r2 = _ols(np.log(np.arange(1, len(d) + 1)), np.log(d))
    return FitResult("power_law", {"lambda": -slope, "c": math.exp(intercept)}, r2, len(d))


def midterm_deviation(seq: Sequence[float]) -> tuple[float, float]:
    """Mean relative gap between each interior term and the geometric / harmonic
    mean of its two neighbours."""
    x = [float(v) for v in seq]
    if len(x) < 3:
        raise TooShort(f"need at least 3 values, got {len(x)}")
    if any(not v > 0 for v in x):
        raise NonPositive("values must be positive")
    geo, har = [], []
    for k in range(1, len(x) - 1):
        lo, mid, hi = x[k - 1], x[k], x[k + 1]
        geo.append(abs(mid - math.sqrt(lo * hi)) / mid)
        har.append(abs(mid - 2 * lo * hi / (lo + hi)) / mid)
    return math.fsum(geo) / len(geo), math.fsum(har) / len(har)


def pareto_share(degrees: Sequence[float], top_frac: float = 0.2) -> float:
    """Fraction of total degree held by the top ceil(top_frac * n) nodes."""
    d = [float(v) for v in degrees]
    if not d:
        raise EmptyInput("no degrees given")
    if not 0 < top_frac <= 1:
        raise ValueError(f"top_frac must be in (0, 1], got {top_frac}")
    if any(v < 0 for v in d):
        raise NonPositive("degrees must be non-negative")
    total = math.fsum(d)
    if total == 0:
        raise DegenerateInput("total degree is zero")
    t = max(1, top_count(len(d), top_frac))
    return math.fsum(sorted(d, reverse=True)[:t]) / total


def tv_distance(p: Sequence[float], q: Sequence[float]) -> float:
    """Total variation distance after renormalizing both inputs."""
    if len(p) != len(q):
        raise SupportMismatch(f"supports differ: {len(p)} vs {len(q)}")
    if not p:
        raise EmptyInput("empty distributions")
    sp, sq = math.fsum(p), math.fsum(q)
    if sp <= 0 or sq <= 0:
        raise DegenerateInput("distributions must have positive mass")
    return 0.5 * math.fsum(abs(x / sp - y / sq) for x, y in zip(p, q))


def _bfs(adj, src):
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v - 1] < 0:
                dist[v - 1] = dist[u] + 1
                queue.append(v - 1)
    return dist


def components(graph: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted node-id lists, largest first."""
    adj = graph.adjacency()
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = [i + 1 for i, d in enumerate(_bfs(adj, s)) if d >= 0]
        for u in comp:
            seen[u - 1] = True
        out.append(comp)
    out.sort(key=lambda c: (-len(c), c[0]))
    return out


def largest_component(graph: SimpleGraph) -> SimpleGraph:
    """Largest component, relabeled 1..m in increasing original id order."""
    comp = components(graph)[0]
    relabel = {u: i + 1 for i, u in enumerate(comp)}
    edges = tuple((relabel[u], relabel[v]) for u, v in graph.edges if u in relabel)
    return SimpleGraph(len(comp), edges)


def characteristic_path_length(graph: SimpleGraph) -> float:
    """Mean shortest-path length over all unordered node pairs."""
    if graph.n < 2:
        raise DegenerateInput("need at least two nodes")
    adj = graph.adjacency()
    total = 0
    for s in range(graph.n):
        dist = _bfs(adj, s)
        if min(dist) < 0:
            raise Disconnected(len(components(graph)))
        total += sum(dist[s + 1:])
    return total / (graph.n * (graph.n - 1) / 2)


def leading_digit(x: int, base: int = 10) -> int:
    while x >= base:
        x //= base
    return x


def benford_mixture_sim(num_processes: int, max_range: int, seed: int,
                        base: int = 10, levels: int = 1) -> list[float]:
    """Leading-digit frequencies of a mixture of uniform counting processes.

    Each process draws its range S uniformly from [1, max_range] and then one
    value uniformly from [1, S], using :class:`~selfsim.rng.Xoshiro256`.
    ``levels > 1`` nests the draw (each value becomes the range of the next
    uniform draw). Returns frequencies of digits 1..base-1.
    """
    if num_processes < 1:
        raise BadRange(f"need at least one process, got {num_processes}")
    if max_range < base:
        raise BadRange(f"max_range must be >= {base}, got {max_range}")
    if base < 2 or levels < 1:
        raise BadRange("base must be >= 2 and levels >= 1")
    gen = Xoshiro256(seed)
    counts = [0] * base
    for _ in range(num_processes):
        x = gen.integer(1, max_range)
        for _ in range(levels):
            x = gen.integer(1, x)
        counts[leading_digit(x, base)] += 1
    return [c / num_processes for c in counts[1:]]


def benford_distance(freqs: Sequence[float], base: int = 10) -> float:
    return tv_distance(freqs, [benford_pmf(d, base) for d in range(1, base)])

"""Network growth by alternating between two self-similarity modes.

A stage with branching factor r and depth D has layers l = 0..D; layer l holds
r**l nodes of degree r**(D-l). Node ids are assigned in rank order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import graph_realization as gr
from .distributions import Count, aggregate_connectivity
from .errors import BadDepth, EmptyInput, NonConsecutive


@dataclass(frozen=True)
class ModeSpec:
    r: int
    label: str = ""

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"mode factor must be >= 2, got {self.r}")
        if not self.label:
            object.__setattr__(self, "label", str(self.r))


class Layer(NamedTuple):
    level: int
    count: int
    degree: int
    node_lo: int
    node_hi: int


@dataclass(frozen=True)
class EvolutionStage:
    index: int
    mode: ModeSpec
    depth: int
    layers: tuple[Layer, ...] = field(init=False)

    def __post_init__(self):
        if self.depth < 1:
            raise BadDepth(f"depth must be >= 1, got {self.depth}")
        r, D = self.mode.r, self.depth
        layers, lo = [], 1
        for level in range(D + 1):
            count = r ** level
            layers.append(Layer(level, count, r ** (D - level), lo, lo + count - 1))
            lo += count
        object.__setattr__(self, "layers", tuple(layers))

    @property
    def node_count(self) -> int:
        return (self.mode.r ** (self.depth + 1) - 1) // (self.mode.r - 1)

    @property
    def total_connections(self) -> int:
        return (self.depth + 1) * self.mode.r ** self.depth

    @property
    def top_degree(self) -> int:
        return self.mode.r ** self.depth

    def degrees(self) -> list[int]:
        """Theoretical degree of each node in id order."""
        out = []
        for layer in self.layers:
            out.extend([layer.degree] * layer.count)
        return out


def _mode(m) -> ModeSpec:
    return m if isinstance(m, ModeSpec) else ModeSpec(int(m))


def stage_table(r, depth: int, index: int = 1) -> EvolutionStage:
    return EvolutionStage(index, _mode(r), depth)


def next_depth(prev_top_degree: int, r: int) -> int:
    """Smallest D >= 1 with r**D >= prev_top_degree."""
    D = 1
    while r ** D < prev_top_degree:
        D += 1
    return D


def evolve(modes: Sequence, stages: int, initial_depth: int = 2) -> list[EvolutionStage]:
    """Alternate between ``modes[0]`` and ``modes[1]`` for ``stages`` stages.

    Each new stage takes the smallest depth whose top degree reaches the
    previous top degree; if that would not add nodes (e.g. the same mode twice
    in a row) the depth is raised until the network grows.
    """
    if stages < 1:
        raise ValueError(f"need at least one stage, got {stages}")
    if len(modes) != 2:
        raise ValueError("evolve takes exactly two modes")
    specs = [_mode(m) for m in modes]
    out = [EvolutionStage(1, specs[0], initial_depth)]
    for s in range(2, stages + 1):
        prev = out[-1]
        mode = specs[(s - 1) % 2]
        D = next_depth(prev.top_degree, mode.r)
        while EvolutionStage(s, mode, D).node_count <= prev.node_count:
            D += 1
        out.append(EvolutionStage(s, mode, D))
    return out


@dataclass(frozen=True)
class TransitionReport:
    deltas: tuple[tuple[int, int], ...]  # (node id, degree change) for every node of either stage
    new_nodes: tuple[int, ...]
    removed_nodes: tuple[int, ...]
    unchanged: tuple[int, ...]

    def delta(self, node: int) -> int:
        return dict(self.deltas)[node]

    @property
    def gained(self) -> dict[int, int]:
        return {u: d for u, d in self.deltas if d > 0}

    @property
    def lost(self) -> dict[int, int]:
        return {u: d for u, d in self.deltas if d < 0}


def transition_report(prev: EvolutionStage, nxt: EvolutionStage) -> TransitionReport:
    """Per-node degree changes between consecutive stages (aligned by node id).

    A stage compared with itself is allowed and yields all-zero deltas.
    """
    if nxt.index not in (prev.index, prev.index + 1):
        raise NonConsecutive(f"stages {prev.index} and {nxt.index} are not consecutive")
    before, after = prev.degrees(), nxt.degrees()
    n = max(len(before), len(after))
    deltas = []
    for node in range(1, n + 1):
        b = before[node - 1] if node <= len(before) else 0
        a = after[node - 1] if node <= len(after) else 0
        deltas.append((node, a - b))
    return TransitionReport(
        deltas=tuple(deltas),
        new_nodes=tuple(range(len(before) + 1, len(after) + 1)),
        removed_nodes=tuple(range(len(after) + 1, len(before) + 1)),
        unchanged=tuple(u for u, d in deltas if d == 0 and u <= min(len(before), len(after))),
    )


@dataclass(frozen=True)
class RealizedStage:
    stage: EvolutionStage
    theoretical: gr.DegreeSequence
    actual: gr.DegreeSequence
    graph: gr.SimpleGraph
    notes: tuple[str, ...]


def realize_stage(stage: EvolutionStage) -> RealizedStage:
    """Repair the stage's degree table if needed and realize it as a graph."""
    theoretical = gr.DegreeSequence(tuple(stage.degrees()))
    actual = gr.repair_sequence(theoretical)
    notes = []
    if actual != theoretical:
        changed = [i + 1 for i, (x, y) in enumerate(zip(theoretical, actual)) if x != y]
        reason = "odd" if not theoretical.is_even else "not graphical"
        notes.append(
            f"stage {stage.index}: theoretical total {theoretical.total} is {reason}; "
            f"repaired to {actual.total} by adding links at "
            f"node{'s' if len(changed) > 1 else ''} " + ",".join(map(str, changed))
        )
    return RealizedStage(stage, theoretical, actual, gr.realize(actual), tuple(notes))


def second_level_ratio(stages: Sequence[EvolutionStage]) -> tuple[list[float], float]:
    """Layer-0 degree over layer-1 degree for each stage, and their mean."""
    if not stages:
        raise EmptyInput("no stages given")
    ratios = [s.layers[0].degree / s.layers[1].degree for s in stages]
    return ratios, sum(ratios) / len(ratios)


def mode_aggregate(top: float, ratio: float, count: Count) -> float:
    return aggregate_connectivity(top, ratio, count)

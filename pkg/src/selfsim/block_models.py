"""Block-equal-mass (p3) distribution and grouping of the geometric series.

Ranks are split into consecutive blocks of sizes 1, r, r**2, ...; every block
carries the same total probability 1/L. With r=2 block k is exactly the dyadic
range 2**(k-1)..2**k-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from . import scaling_solvers
from .distributions import GeometricRankModel, INFINITE, nominal_degree
from .errors import InvalidRank, PartitionOverrun, RankOutOfSupport, RatioNotAboveOne

WITHIN_BLOCK_MODES = ("uniform", "geometric")
EQUALITY_TOL = 1e-12


def block_span(k: int, r: int = 2) -> tuple[int, int]:
    """First and last rank of block ``k`` (1-indexed)."""
    lo = (r ** (k - 1) - 1) // (r - 1) + 1
    return lo, lo + r ** (k - 1) - 1


def support_size(r: int, L: int) -> int:
    return (r ** L - 1) // (r - 1)


def block_index(i: int, r: int = 2) -> int:
    """Block containing rank ``i``: the smallest k with (r**k - 1)/(r - 1) >= i."""
    if i < 1:
        raise InvalidRank(f"rank must be >= 1, got {i}")
    if r < 2:
        raise InvalidRank(f"branching factor must be >= 2, got {r}")
    k, end = 1, 1
    while end < i:
        k += 1
        end = support_size(r, k)
    return k


@dataclass(frozen=True)
class BlockEqualMassModel:
    """``L`` blocks of sizes r**(k-1), each holding mass 1/L.

    ``within_block="uniform"`` spreads a block's mass evenly. With
    ``"geometric"`` block k (k >= 2) decays by the ratio that equalizes blocks
    k-1 and k under a single geometric law, i.e. ``solve_block_pair(k-1, r)``,
    and is then rescaled to 1/L.
    """

    r: int = 2
    L: int = 3
    within_block: str = "uniform"

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"branching factor must be >= 2, got {self.r}")
        if self.L < 1:
            raise ValueError(f"number of blocks must be >= 1, got {self.L}")
        if self.within_block not in WITHIN_BLOCK_MODES:
            raise ValueError(f"unknown within-block mode {self.within_block!r}")

    @property
    def size(self) -> int:
        return support_size(self.r, self.L)

    def span(self, k: int) -> tuple[int, int]:
        return block_span(k, self.r)

    @cached_property
    def _weights(self) -> tuple[float, ...]:
        out = []
        for k in range(1, self.L + 1):
            n = self.r ** (k - 1)
            if self.within_block == "uniform" or n == 1:
                out.extend([1.0 / (self.L * n)] * n)
                continue
            ratio = scaling_solvers.solve_block_pair(k - 1, self.r).value
            raw = [ratio ** -t for t in range(n)]
            scale = 1.0 / (self.L * math.fsum(raw))
            out.extend(w * scale for w in raw)
        return tuple(out)

    def pmf(self) -> tuple[float, ...]:
        """Probabilities of ranks 1..size."""
        return self._weights


def p3_pmf(i: int, model: BlockEqualMassModel) -> float:
    if not 1 <= i <= model.size:
        raise RankOutOfSupport(f"rank {i} outside 1..{model.size}")
    return model.pmf()[i - 1]


def block_mass_vector(model: BlockEqualMassModel) -> list[float]:
    p = model.pmf()
    masses = []
    for k in range(1, model.L + 1):
        lo, hi = model.span(k)
        masses.append(math.fsum(p[lo - 1:hi]))
    return masses


def group_sum_ratio(a: float, g: int) -> float:
    """Ratio between consecutive g-term groups of 1 + 1/a + 1/a**2 + ..."""
    if not a > 1:
        raise RatioNotAboveOne(f"decay ratio must exceed 1, got {a!r}")
    if g < 1:
        raise ValueError(f"group size must be >= 1, got {g}")
    return a ** -g


def grouped_partial_sums(a: float, g: int, groups: int) -> list[float]:
    """Explicit sums of the first ``groups`` consecutive g-term groups of the series."""
    return [math.fsum(a ** -i for i in range(j * g, (j + 1) * g)) for j in range(groups)]


class GroupComparison(NamedTuple):
    group: int
    mass: float
    following: float
    outcome: str  # "dominates", "equal" or "below"


def _rank_values(source) -> Sequence[float]:
    if isinstance(source, BlockEqualMassModel):
        return source.pmf()
    if isinstance(source, GeometricRankModel):
        if source.N is INFINITE:
            raise ValueError("misaligned_dominance needs a finite geometric model")
        return [nominal_degree(k, source) for k in range(1, source.N + 1)]
    return list(source)


def misaligned_dominance(source, partition: Sequence[int], factor: int | None = None
                         ) -> list[GroupComparison]:
    """Compare each group's mass with the mass of the ``factor * size`` ranks after it.

    ``source`` is a block model (its pmf), a finite geometric model (its
    nominal degrees) or a plain sequence of per-rank values. ``partition``
    lists contiguous group sizes starting from rank 1 and need not follow the
    block boundaries. ``factor`` defaults to the block model's branching factor
    and to 2 otherwise, so a group is weighed against the next group of double
    size (two groups of its own size, when sizes are equal).

    Groups whose comparison window runs past the support are skipped.
    Differences within 1e-12 are reported as ``"equal"``.
    """
    values = _rank_values(source)
    if factor is None:
        factor = source.r if isinstance(source, BlockEqualMassModel) else 2
    if any(s < 1 for s in partition):
        raise ValueError("group sizes must be positive")
    if sum(partition) > len(values):
        raise PartitionOverrun(
            f"partition covers {sum(partition)} ranks, support has {len(values)}")
    out, pos = [], 0
    for g, size in enumerate(partition, start=1):
        end = pos + size
        if end + factor * size > len(values):
            break
        m = math.fsum(values[pos:end])
        rest = math.fsum(values[end:end + factor * size])
        if abs(m - rest) <= EQUALITY_TOL:
            outcome = "equal"
        elif m > rest:
            outcome = "dominates"
        else:
            outcome = "below"
        out.append(GroupComparison(g, m, rest, outcome))
        pos = end
    return out

"""Rank and digit distributions plus closed-form aggregate connectivity.

Models are small frozen dataclasses; normalization constants are computed by
direct summation over the (small, finite) support. The geometric rank model
accepts ``N=INFINITE`` for the limiting formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .errors import (
    BadExponent,
    BaseTooSmall,
    BelowSupport,
    CountOutOfRange,
    DigitOutOfRange,
    RankOutOfRange,
    RatioNotAboveOne,
)


class Unbounded(enum.Enum):
    """Marker for an infinite node count."""

    INFINITE = "infinite"

    def __repr__(self):
        return "INFINITE"


INFINITE = Unbounded.INFINITE

Count = Union[int, Unbounded]


def _check_ratio(a):
    if not a > 1:
        raise RatioNotAboveOne(f"decay ratio must exceed 1, got {a!r}")


@dataclass(frozen=True)
class PowerLawModel:
    """p1(k) = c * k**-lam on ranks m..K."""

    lam: float
    m: int = 1
    K: int = 10

    def __post_init__(self):
        if not self.lam > 0:
            raise BadExponent(f"exponent must be positive, got {self.lam!r}")
        if self.m < 1 or self.K < self.m:
            raise RankOutOfRange(f"need 1 <= m <= K, got m={self.m}, K={self.K}")

    @property
    def c(self) -> float:
        return 1.0 / math.fsum(k ** -self.lam for k in range(self.m, self.K + 1))


@dataclass(frozen=True)
class ZipfModel:
    """Rank-frequency law proportional to 1/k.

    ``mode="harmonic"`` divides by the harmonic number H_n; ``mode="top-match"``
    scales so that rank 1 equals ``top``.
    """

    n: int
    mode: str = "harmonic"
    top: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise RankOutOfRange(f"maximum rank must be >= 1, got {self.n}")
        if self.mode not in ("harmonic", "top-match"):
            raise ValueError(f"unknown Zipf normalization mode {self.mode!r}")
        if self.mode == "top-match" and not (self.top is not None and self.top > 0):
            raise ValueError("top-match mode needs a positive top frequency")

    @property
    def harmonic_number(self) -> float:
        return math.fsum(1.0 / k for k in range(1, self.n + 1))


@dataclass(frozen=True)
class BenfordModel:
    b: int = 10

    def __post_init__(self):
        if self.b < 2:
            raise BaseTooSmall(f"base must be >= 2, got {self.b}")


@dataclass(frozen=True)
class ParetoModel:
    alpha: float
    x_m: float = 1.0

    def __post_init__(self):
        if not (self.alpha > 0 and self.x_m > 0):
            raise ValueError("Pareto shape and scale must be positive")


@dataclass(frozen=True)
class GeometricRankModel:
    """Top node has ``A`` links; each following rank has 1/a of the previous."""

    A: float
    a: float
    N: Count = 10

    def __post_init__(self):
        _check_ratio(self.a)
        if not self.A > 0:
            raise ValueError(f"top connectivity must be positive, got {self.A!r}")
        if self.N is not INFINITE and self.N < 1:
            raise RankOutOfRange(f"node count must be >= 1, got {self.N}")

    @property
    def c(self) -> float:
        # sum_{k>=1} a**-k = 1/(a-1)
        if self.N is INFINITE:
            return self.a - 1.0
        return 1.0 / math.fsum(self.a ** -k for k in range(1, self.N + 1))


def benford_pmf(d: int, b: int = 10) -> float:
    """Probability log_b(1 + 1/d) that the leading base-``b`` digit is ``d``."""
    if b < 2:
        raise BaseTooSmall(f"base must be >= 2, got {b}")
    if not 1 <= d <= b - 1:
        raise DigitOutOfRange(f"digit {d} outside 1..{b - 1}")
    # difference of logs so the pmf telescopes to exactly log(b)/log(b)
    return (math.log(d + 1) - math.log(d)) / math.log(b)


def zipf_pmf(k: int, model: ZipfModel) -> float:
    if not 1 <= k <= model.n:
        raise RankOutOfRange(f"rank {k} outside 1..{model.n}")
    if model.mode == "top-match":
        return model.top / k
    return (1.0 / k) / model.harmonic_number


def power_law_pmf(k: int, model: PowerLawModel, normalized: bool = True) -> float:
    if not model.m <= k <= model.K:
        raise RankOutOfRange(f"rank {k} outside {model.m}..{model.K}")
    value = k ** -model.lam
    return model.c * value if normalized else value


def pareto_density(x: float, model: ParetoModel) -> float:
    if x < model.x_m:
        raise BelowSupport(f"x={x} below the Pareto minimum {model.x_m}")
    return model.alpha * model.x_m ** model.alpha / x ** (model.alpha + 1)


def nominal_degree(k: int, model: GeometricRankModel) -> float:
    """Real-valued connectivity A * a**-(k-1) of the rank-``k`` node."""
    _check_rank(k, model.N)
    return model.A * model.a ** -(k - 1)


def geometric_rank_pmf(k: int, model: GeometricRankModel, normalized: bool = True) -> float:
    """p2(k) = c * a**-k; the un-normalized form starts at 1 for k=1."""
    _check_rank(k, model.N)
    if normalized:
        return model.c * model.a ** -k
    return model.a ** -(k - 1)


def _check_rank(k, N):
    if k < 1 or (N is not INFINITE and k > N):
        raise RankOutOfRange(f"rank {k} outside 1..{N}")


def aggregate_connectivity(A: float, a: float, N: Count) -> float:
    """Total connectivity S = A(1 + 1/a + ... + 1/a**(N-1)).

    For ``N=INFINITE`` this is the limit A*a/(a-1).
    """
    _check_ratio(a)
    if N is INFINITE:
        return A * a / (a - 1.0)
    if N < 1:
        raise RankOutOfRange(f"node count must be >= 1, got {N}")
    return A * (a - a ** (1 - N)) / (a - 1.0)


def aggregate_sensitivity(a: float) -> float:
    """d/da of a/(a-1), the infinite aggregate with A=1."""
    _check_ratio(a)
    return -1.0 / (a - 1.0) ** 2


def table_frequencies(model, count: int, normalized: bool = True) -> list[tuple[int, float]]:
    """``(rank, frequency)`` pairs for the first ``count`` elements of ``model``.

    ``normalized`` only affects the power-law and geometric models; Zipf follows
    its own mode and Benford is always a probability.
    """
    if isinstance(model, BenfordModel):
        _check_count(count, model.b - 1)
        return [(d, benford_pmf(d, model.b)) for d in range(1, count + 1)]
    if isinstance(model, ZipfModel):
        _check_count(count, model.n)
        return [(k, zipf_pmf(k, model)) for k in range(1, count + 1)]
    if isinstance(model, PowerLawModel):
        _check_count(count, model.K - model.m + 1)
        return [(k, power_law_pmf(k, model, normalized))
                for k in range(model.m, model.m + count)]
    if isinstance(model, GeometricRankModel):
        _check_count(count, None if model.N is INFINITE else model.N)
        return [(k, geometric_rank_pmf(k, model, normalized)) for k in range(1, count + 1)]
    raise TypeError(f"unsupported model {type(model).__name__}")


def _check_count(count, limit):
    if count < 1 or (limit is not None and count > limit):
        raise CountOutOfRange(f"count {count} outside 1..{limit}")

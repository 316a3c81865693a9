"""Scaling factors of the self-similarity equations, found by plain bisection.

All target functions here are continuous and strictly monotone on the search
bracket, so bisection is enough and keeps every result reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    BadFraction,
    InvalidGroupSize,
    InvalidIndex,
    NoSignChange,
    NoSolution,
    NonFinite,
)

BRACKET = (1.0 + 1e-9, 64.0)
TOL = 1e-12
PARETO_TOL = 1e-9
MIN_WIDTH = 1e-15
MAX_ITER = 400
# stop only on an exact zero; the bracket width ends the search
FLOOR_TOL = 1e-300
# beyond this block size the pair root is too close to 1 to meet TOL in doubles
MAX_PAIR_BLOCK = 2 ** 13


@dataclass(frozen=True)
class RootResult:
    value: float
    residual: float
    iterations: int


def _eval(f, x):
    y = f(x)
    if not math.isfinite(y):
        raise NonFinite(f"f({x!r}) = {y!r}")
    return y


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = TOL) -> RootResult:
    """Find a root of ``f`` in ``[lo, hi]``.

    Stops once ``|f(x)| <= tol`` or the bracket is narrower than 1e-15 (or can
    no longer be split in floating point). The returned residual is
    ``|f(value)|``.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    flo, fhi = _eval(f, lo), _eval(f, hi)
    if abs(flo) <= tol:
        return RootResult(lo, abs(flo), 0)
    if abs(fhi) <= tol:
        return RootResult(hi, abs(fhi), 0)
    if (flo < 0) == (fhi < 0):
        raise NoSignChange(f"f has the same sign at {lo} and {hi}")

    best = (abs(flo), lo) if abs(flo) < abs(fhi) else (abs(fhi), hi)
    it = 0
    while it < MAX_ITER and hi - lo > MIN_WIDTH:
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi:
            break
        it += 1
        fmid = _eval(f, mid)
        if abs(fmid) <= best[0]:
            best = (abs(fmid), mid)
        if abs(fmid) <= tol:
            return RootResult(mid, abs(fmid), it)
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return RootResult(best[1], best[0], it)


def _solve(f, tol):
    """Bisect on BRACKET down to the floating-point limit, then check ``tol``."""
    res = bisect(f, *BRACKET, tol=FLOOR_TOL)
    if res.residual > tol:
        raise NoSolution(f"residual {res.residual:.3g} above tolerance {tol:g}")
    return res


def _power_sum(a, start, stop):
    """sum_{i=start}^{stop-1} a**-i"""
    return math.fsum(a ** -i for i in range(start, stop))


def block_ratio_residual(a: float, r: int) -> float:
    """sum_{i=1..r} a**-i - 1; zero at the ``r``-element block ratio."""
    return _power_sum(a, 1, r + 1) - 1.0


def solve_block_ratio(r: int) -> RootResult:
    """Root a > 1 of 1 = 1/a + 1/a**2 + ... + 1/a**r.

    r=2 gives the golden ratio, r=3 the tribonacci constant.
    """
    if r < 2:
        raise InvalidGroupSize(f"group size must be >= 2, got {r}")
    return _solve(lambda a: block_ratio_residual(a, r), TOL)


def block_pair_residual(a: float, j: int, r: int = 2) -> float:
    """Mass of block j minus mass of block j+1 under weights a**-i.

    The difference is divided by a**-(first rank of block j) and by the size of
    block j. Neither changes the root; both keep the value O(1) as j grows.
    """
    size = r ** (j - 1)
    nxt = r ** j
    return (_power_sum(a, 0, size) - _power_sum(a, size, size + nxt)) / size


def solve_block_pair(j: int, r: int = 2) -> RootResult:
    """Ratio a > 1 that makes block ``j`` and block ``j+1`` carry equal mass.

    For r=2 the blocks are ranks 2**(j-1)..2**j-1 and 2**j..2**(j+1)-1, and the
    root is phi**(2**(1-j)), i.e. a**(2**j) = a**(2**(j-1)) + 1.
    """
    if j < 1:
        raise InvalidIndex(f"block pair index must be >= 1, got {j}")
    if r < 2:
        raise InvalidGroupSize(f"branching factor must be >= 2, got {r}")
    if r ** (j - 1) > MAX_PAIR_BLOCK:
        raise InvalidIndex(f"block pair index {j} too deep for branching {r}")
    return _solve(lambda a: block_pair_residual(a, j, r), TOL)


def top_count(n: int, frac: float) -> int:
    """ceil(frac * n), immune to float noise such as 0.2*15 = 3.0000000000000004."""
    return math.ceil(round(frac * n, 9))


def pareto_residual(a, N, t, mass_frac, infinite_tail=False):
    head = _power_sum(a, 0, t)
    if infinite_tail:
        return head - mass_frac * a / (a - 1.0)
    return head - mass_frac * (a - a ** (1 - N)) / (a - 1.0)


def solve_pareto_a(
    N: int,
    top_frac: float = 0.2,
    mass_frac: float = 0.8,
    infinite_tail: bool = False,
) -> RootResult:
    """Decay ratio at which the top ``top_frac`` of N nodes hold ``mass_frac``
    of the total connectivity.

    The top-node count is ceil(top_frac * N). By default the total is the
    finite N-term sum; ``infinite_tail=True`` uses the A*a/(a-1) limit instead.
    The top connectivity A cancels and is not needed.
    """
    if not (0 < top_frac < 1 and 0 < mass_frac < 1):
        raise BadFraction(f"fractions must lie in (0, 1): {top_frac}, {mass_frac}")
    if N < 5:
        raise NoSolution(f"need at least 5 nodes, got {N}")
    t = top_count(N, top_frac)
    if not 1 <= t < N:
        raise BadFraction(f"top-node count {t} must be in [1, {N})")

    def f(a):
        return pareto_residual(a, N, t, mass_frac, infinite_tail)

    try:
        return _solve(f, PARETO_TOL)
    except NoSignChange as exc:
        raise NoSolution(str(exc)) from None

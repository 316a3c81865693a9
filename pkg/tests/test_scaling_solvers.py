import math

import numpy as np
import pytest

from selfsim.errors import InvalidGroupSize, InvalidIndex, NoSignChange, NonFinite, BadFraction
from selfsim.scaling_solvers import (
    TOL,
    bisect,
    block_pair_residual,
    block_ratio_residual,
    pareto_residual,
    solve_block_pair,
    solve_block_ratio,
    solve_pareto_a,
    top_count,
)

PHI = (1 + math.sqrt(5)) / 2


def polynomial_root_above_one(coeffs):
    """Oracle: the real root > 1 from numpy's companion-matrix eigenvalues."""
    roots = np.roots(coeffs)
    real = [r.real for r in roots if abs(r.imag) < 1e-12 and r.real > 1]
    assert len(real) == 1
    return real[0]


class TestBisect:
    def test_linear(self):
        assert bisect(lambda x: x - 2, 0, 5, 1e-12).value == pytest.approx(2.0, abs=1e-12)

    def test_golden(self):
        assert bisect(lambda x: x * x - x - 1, 1, 3, 1e-12).value == pytest.approx(
            1.6180339887, abs=1e-9)

    def test_cube_root(self):
        res = bisect(lambda x: x ** 3 - 2, 1, 2, 1e-12)
        assert res.value == pytest.approx(2 ** (1 / 3), abs=1e-6)
        assert res.residual <= 1e-12
        assert 1 <= res.value <= 2

    def test_deterministic(self):
        f = lambda x: math.cos(x) - x
        assert bisect(f, 0, 1) == bisect(f, 0, 1)

    def test_no_sign_change(self):
        with pytest.raises(NoSignChange):
            bisect(lambda x: x * x + 1, -1, 1)

    def test_non_finite(self):
        with pytest.raises(NonFinite):
            bisect(lambda x: math.inf if x > 0.5 else -1.0, 0, 1)

    def test_stops_on_width_when_tolerance_unreachable(self):
        # step function: |f| never small, bracket collapses onto the jump
        res = bisect(lambda x: -1.0 if x < 0.3 else 1.0, 0, 1, 1e-12)
        assert res.value == pytest.approx(0.3, abs=1e-14)
        assert res.residual == 1.0


class TestBlockRatio:
    def test_golden_ratio(self):
        res = solve_block_ratio(2)
        assert res.value == pytest.approx(1.6180339, abs=1e-6)
        assert res.value == pytest.approx(PHI, abs=1e-12)
        assert res.residual <= 1e-12

    def test_tribonacci(self):
        oracle = polynomial_root_above_one([1, -1, -1, -1])
        res = solve_block_ratio(3)
        assert res.value == pytest.approx(oracle, abs=1e-12)
        assert res.value == pytest.approx(1.8392868, abs=1e-6)

    def test_large_group_approaches_two(self):
        v = solve_block_ratio(20).value
        assert 1.99999 < v < 2.0
        # a**(r+1) - 2 a**r + 1 = 0 is the cleared form of the same equation
        assert v ** 21 - 2 * v ** 20 + 1 == pytest.approx(0, abs=1e-6)

    def test_increasing_and_bounded(self):
        values = [solve_block_ratio(r).value for r in range(2, 16)]
        assert all(x < y for x, y in zip(values, values[1:]))
        assert all(1 < v < 2 for v in values)
        assert all(block_ratio_residual(2.0, r) < 0 for r in range(2, 16))

    @pytest.mark.parametrize("r", [2, 3, 5, 8])
    def test_residual_reevaluated(self, r):
        res = solve_block_ratio(r)
        assert abs(block_ratio_residual(res.value, r)) <= TOL

    def test_invalid(self):
        with pytest.raises(InvalidGroupSize):
            solve_block_ratio(1)


class TestBlockPair:
    def test_first_pair_is_golden(self):
        assert solve_block_pair(1).value == pytest.approx(solve_block_ratio(2).value, abs=1e-12)

    def test_second_pair_sqrt_phi(self):
        v = solve_block_pair(2).value
        assert v == pytest.approx(math.sqrt(PHI), abs=1e-9)
        assert v == pytest.approx(1.2720196, abs=1e-6)
        assert abs(v ** 4 - v ** 2 - 1) < 1e-9

    def test_third_pair_fourth_root_phi(self):
        # factoring the pair equation leaves a**8 = a**4 + 1
        v = solve_block_pair(3).value
        oracle = polynomial_root_above_one([1, 0, 0, 0, -1, 0, 0, 0, -1])
        assert v == pytest.approx(oracle, abs=1e-9)
        assert v == pytest.approx(PHI ** 0.25, abs=1e-9)
        assert v == pytest.approx(1.1278385, abs=1e-6)

    @pytest.mark.parametrize("j", range(1, 15))
    def test_closed_form(self, j):
        res = solve_block_pair(j)
        v = res.value
        assert v == pytest.approx(PHI ** (2.0 ** (1 - j)), abs=1e-9)
        assert v ** (2 ** j) == pytest.approx(v ** (2 ** (j - 1)) + 1, abs=1e-9)
        assert res.residual <= TOL

    def test_unscaled_sums_balance(self):
        v = solve_block_pair(3).value
        left = math.fsum(v ** -i for i in range(4, 8))
        right = math.fsum(v ** -i for i in range(8, 16))
        assert left == pytest.approx(right, rel=1e-11)

    def test_ternary_first_pair_matches_block_ratio(self):
        assert solve_block_pair(1, r=3).value == pytest.approx(solve_block_ratio(3).value,
                                                               abs=1e-12)

    def test_invalid(self):
        with pytest.raises(InvalidIndex):
            solve_block_pair(0)
        with pytest.raises(InvalidIndex):
            solve_block_pair(40)


class TestParetoA:
    def test_n10(self):
        res = solve_pareto_a(10)
        assert 2.0 < res.value < 2.5
        assert res.residual < 1e-9

    def test_n5_single_top_node(self):
        assert 4.8 < solve_pareto_a(5).value < 5.1

    def test_share_closes(self):
        for N in (10, 25, 55):
            a = solve_pareto_a(N).value
            t = top_count(N, 0.2)
            head = math.fsum(a ** -i for i in range(t))
            total = math.fsum(a ** -i for i in range(N))
            assert head / total == pytest.approx(0.8, abs=1e-9)

    def test_decreasing_in_n(self):
        values = [solve_pareto_a(N).value for N in range(10, 56, 5)]
        assert all(x > y for x, y in zip(values, values[1:]))
        assert solve_pareto_a(55).value < solve_pareto_a(10).value

    def test_infinite_tail_option(self):
        res = solve_pareto_a(10, infinite_tail=True)
        # 1 + 1/a = 0.8 a/(a-1)  ->  a**2 = 5  for two top nodes
        assert res.value == pytest.approx(math.sqrt(5), abs=1e-8)
        assert abs(pareto_residual(res.value, 10, 2, 0.8, True)) < 1e-9

    def test_top_count_robust_ceil(self):
        assert top_count(15, 0.2) == 3
        assert top_count(11, 0.2) == 3
        assert top_count(10, 0.2) == 2

    def test_bad_fraction(self):
        with pytest.raises(BadFraction):
            solve_pareto_a(10, top_frac=1.5)
        with pytest.raises(BadFraction):
            solve_pareto_a(10, mass_frac=0)


def test_block_pair_residual_sign_at_bracket():
    for j in (1, 4, 10):
        assert block_pair_residual(1 + 1e-9, j) < 0 < block_pair_residual(64, j)

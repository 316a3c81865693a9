import math

import pytest
from hypothesis import assume, given, strategies as st

from selfsim.distributions import (
    INFINITE,
    BenfordModel,
    GeometricRankModel,
    ParetoModel,
    PowerLawModel,
    ZipfModel,
    aggregate_connectivity,
    aggregate_sensitivity,
    benford_pmf,
    geometric_rank_pmf,
    nominal_degree,
    pareto_density,
    power_law_pmf,
    table_frequencies,
    zipf_pmf,
)
from selfsim.errors import (
    BadExponent,
    BaseTooSmall,
    BelowSupport,
    CountOutOfRange,
    DigitOutOfRange,
    RankOutOfRange,
    RatioNotAboveOne,
)

ratios = st.floats(min_value=1.01, max_value=10.0)


class TestBenford:
    def test_table_values(self):
        assert benford_pmf(1, 10) == pytest.approx(0.301, abs=5e-4)
        assert benford_pmf(9, 10) == pytest.approx(0.046, abs=5e-4)

    def test_base_two_is_exactly_one(self):
        assert benford_pmf(1, 2) == 1.0

    @pytest.mark.parametrize("d,b", [(0, 10), (10, 10), (2, 2)])
    def test_digit_out_of_range(self, d, b):
        with pytest.raises(DigitOutOfRange):
            benford_pmf(d, b)

    def test_base_too_small(self):
        with pytest.raises(BaseTooSmall):
            benford_pmf(1, 1)
        with pytest.raises(BaseTooSmall):
            BenfordModel(1)

    @given(st.integers(min_value=2, max_value=200))
    def test_normalized_and_decreasing(self, b):
        p = [benford_pmf(d, b) for d in range(1, b)]
        assert math.fsum(p) == pytest.approx(1.0, abs=1e-12)
        assert all(x > y for x, y in zip(p, p[1:]))


class TestZipf:
    def test_top_match(self):
        m = ZipfModel(9, "top-match", 0.301)
        assert zipf_pmf(4, m) == pytest.approx(0.075, abs=5e-3)
        assert zipf_pmf(1, m) == 0.301

    def test_harmonic(self):
        assert zipf_pmf(1, ZipfModel(1)) == 1.0
        # (1/2) / (11/6)
        assert zipf_pmf(2, ZipfModel(3)) == pytest.approx(3 / 11, abs=1e-12)
        assert zipf_pmf(2, ZipfModel(3)) == pytest.approx(0.2727, abs=1e-4)

    def test_rank_out_of_range(self):
        with pytest.raises(RankOutOfRange):
            zipf_pmf(4, ZipfModel(3))

    @given(st.integers(min_value=1, max_value=500))
    def test_harmonic_normalized(self, n):
        m = ZipfModel(n)
        assert math.fsum(zipf_pmf(k, m) for k in range(1, n + 1)) == pytest.approx(1, abs=1e-12)

    @given(st.integers(min_value=3, max_value=300))
    def test_harmonic_midterm_identity(self, n):
        m = ZipfModel(n)
        p = [zipf_pmf(k, m) for k in range(1, n + 1)]
        for k in range(1, n - 1):
            hm = 2 * p[k - 1] * p[k + 1] / (p[k - 1] + p[k + 1])
            assert p[k] == pytest.approx(hm, abs=1e-12)
            assert p[k] > p[k + 1]


class TestPowerLaw:
    def test_unnormalized_sequence(self):
        m = PowerLawModel(2, 1, 10)
        assert power_law_pmf(3, m, normalized=False) == pytest.approx(1 / 9, abs=1e-15)
        assert power_law_pmf(1, m, normalized=False) == 1.0

    def test_normalized(self):
        m = PowerLawModel(2, 1, 3)
        expected = (1 / 4) / (1 + 1 / 4 + 1 / 9)
        assert power_law_pmf(2, m) == pytest.approx(expected, abs=1e-15)
        assert power_law_pmf(2, m) == pytest.approx(0.18367, abs=1e-4)

    def test_errors(self):
        with pytest.raises(BadExponent):
            PowerLawModel(0, 1, 3)
        with pytest.raises(RankOutOfRange):
            power_law_pmf(4, PowerLawModel(2, 1, 3))

    @given(st.floats(min_value=0.5, max_value=4), st.integers(1, 20), st.integers(0, 200))
    def test_normalized_and_decreasing(self, lam, m, extra):
        model = PowerLawModel(lam, m, m + extra)
        p = [power_law_pmf(k, model) for k in range(m, m + extra + 1)]
        assert math.fsum(p) == pytest.approx(1.0, abs=1e-12)
        assert all(x > y for x, y in zip(p, p[1:]))

    def test_asymptotic_geometric_mean(self):
        lam, k = 2.0, 100
        p = lambda j: j ** -lam
        ratio = p(k) ** 2 / (p(k - 1) * p(k + 1))
        assert ratio == pytest.approx((1 - 1 / k ** 2) ** lam, rel=1e-12)
        assert abs(ratio - 1) < 1e-3


class TestPareto:
    def test_values(self):
        assert pareto_density(1, ParetoModel(1, 1)) == 1.0
        assert pareto_density(2, ParetoModel(1, 1)) == 0.25
        assert pareto_density(3, ParetoModel(2, 3)) == pytest.approx(2 / 3, abs=1e-12)

    def test_below_support(self):
        with pytest.raises(BelowSupport):
            pareto_density(0.5, ParetoModel(1, 1))

    @pytest.mark.parametrize("alpha,xm", [(1.0, 1.0), (2.5, 3.0), (0.7, 0.2)])
    def test_integrates_to_one(self, alpha, xm):
        # Simpson on log-spaced [x_m, T] plus the analytic tail (x_m/T)**alpha
        T = xm * 1e4
        n = 20000
        lo, hi = math.log(xm), math.log(T)
        h = (hi - lo) / n
        g = lambda u: pareto_density(math.exp(u), ParetoModel(alpha, xm)) * math.exp(u)
        s = g(lo) + g(hi) + sum((4 if i % 2 else 2) * g(lo + i * h) for i in range(1, n))
        integral = s * h / 3 + (xm / T) ** alpha
        assert integral == pytest.approx(1.0, abs=1e-9)


class TestGeometric:
    def test_unnormalized_sequence(self):
        m = GeometricRankModel(1, 2, 10)
        assert geometric_rank_pmf(3, m, normalized=False) == 0.25

    def test_nominal_degree(self):
        m = GeometricRankModel(10, 1.4, 11)
        assert nominal_degree(1, m) == 10
        assert nominal_degree(2, m) == pytest.approx(10 / 1.4)
        assert round(nominal_degree(2, m)) == 7

    def test_errors(self):
        with pytest.raises(RatioNotAboveOne):
            GeometricRankModel(1, 1.0, 5)
        with pytest.raises(RankOutOfRange):
            geometric_rank_pmf(6, GeometricRankModel(1, 2, 5))

    @given(ratios, st.integers(1, 300))
    def test_normalized(self, a, N):
        m = GeometricRankModel(1, a, N)
        total = math.fsum(geometric_rank_pmf(k, m) for k in range(1, N + 1))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_infinite_normalization(self):
        m = GeometricRankModel(1, 2, INFINITE)
        assert geometric_rank_pmf(1, m) == 0.5
        assert geometric_rank_pmf(3, m) == 0.125

    @given(ratios, st.integers(3, 200))
    def test_geometric_midterm_identity(self, a, N):
        m = GeometricRankModel(1, a, N)
        p = [geometric_rank_pmf(k, m) for k in range(1, N + 1)]
        for k in range(1, N - 1):
            assert p[k] == pytest.approx(math.sqrt(p[k - 1] * p[k + 1]), abs=1e-12)
            assert p[k] > p[k + 1]

    @given(st.floats(0.1, 100), ratios, st.integers(1, 100))
    def test_clamp_ordering(self, A, a, N):
        m = GeometricRankModel(A, a, N)
        nominal = [nominal_degree(k, m) for k in range(1, N + 1)]
        assert math.fsum(max(1.0, x) for x in nominal) >= math.fsum(nominal)


class TestAggregate:
    def test_values(self):
        assert aggregate_connectivity(10, 1.4, INFINITE) == pytest.approx(35.0, abs=1e-9)
        assert aggregate_connectivity(1, 2, 3) == 1.75
        assert aggregate_connectivity(7, 1.3, 1) == pytest.approx(7)

    def test_error(self):
        with pytest.raises(RatioNotAboveOne):
            aggregate_connectivity(1, 0.9, 3)

    @given(st.floats(0.1, 100), ratios, st.integers(1, 500))
    def test_finite_below_limit(self, A, a, N):
        # the gap A*a**(1-N)/(a-1) must be representable next to the limit
        assume(a ** -N > 1e-13)
        finite = aggregate_connectivity(A, a, N)
        assert finite < aggregate_connectivity(A, a, INFINITE)
        explicit = math.fsum(A * a ** -i for i in range(N))
        assert finite == pytest.approx(explicit, rel=1e-9)

    def test_sensitivity(self):
        assert aggregate_sensitivity(2) == -1.0
        assert aggregate_sensitivity(1.5) == -4.0
        h = 1e-5
        S = lambda a: aggregate_connectivity(1, a, INFINITE)
        fd = (S(3 + h) - S(3 - h)) / (2 * h)
        assert aggregate_sensitivity(3) == -0.25
        assert fd == pytest.approx(-0.25, abs=1e-6)


class TestTableFrequencies:
    def test_benford_row(self):
        rows = table_frequencies(BenfordModel(10), 9)
        printed = [0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046]
        assert [d for d, _ in rows] == list(range(1, 10))
        for (_, f), p in zip(rows, printed):
            assert f == pytest.approx(p, abs=5e-4)

    def test_zipf_single(self):
        assert table_frequencies(ZipfModel(9, "top-match", 0.301), 1) == [(1, 0.301)]

    def test_geometric_unnormalized(self):
        rows = table_frequencies(GeometricRankModel(1, 1.5, 10), 5, normalized=False)
        expected = [(2 / 3) ** i for i in range(5)]
        assert [f for _, f in rows] == pytest.approx(expected, abs=1e-12)
        assert [f for _, f in rows] == pytest.approx([1, 0.6667, 0.4444, 0.2963, 0.1975], abs=1e-4)

    def test_matches_pmf(self):
        m = PowerLawModel(2.5, 2, 12)
        rows = table_frequencies(m, 11)
        assert rows == [(k, power_law_pmf(k, m)) for k in range(2, 13)]

    def test_count_out_of_range(self):
        with pytest.raises(CountOutOfRange):
            table_frequencies(BenfordModel(10), 10)
        with pytest.raises(CountOutOfRange):
            table_frequencies(ZipfModel(3), 0)

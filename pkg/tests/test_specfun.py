import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hncsim.errors import DomainError
from hncsim.specfun import EULER_GAMMA, X_MAX, X_MIN, digamma, ln_gamma

from oracles import digamma_series, ln_gamma_series, log_grid, rel_err

LN_SQRT_PI = 0.5723649429247001  # ln(sqrt(pi))


class TestAnalyticIdentities:
    def test_ln_gamma_at_1_and_2_is_exactly_zero(self):
        assert ln_gamma(1.0) == 0.0
        assert ln_gamma(2.0) == 0.0

    def test_ln_gamma_half(self):
        assert math.isclose(ln_gamma(0.5), LN_SQRT_PI, rel_tol=1e-12)

    def test_digamma_one_is_negative_euler_gamma(self):
        assert math.isclose(digamma(1.0), -EULER_GAMMA, rel_tol=1e-12)

    def test_digamma_half(self):
        want = -EULER_GAMMA - 2.0 * math.log(2.0)
        assert math.isclose(digamma(0.5), want, rel_tol=1e-12)

    def test_digamma_10_matches_series_oracle(self):
        # frozen from the asymptotic-series oracle
        assert math.isclose(digamma(10.0), 2.2517525890667211, rel_tol=1e-12)
        assert rel_err(digamma(10.0), digamma_series(10.0)) < 1e-12


class TestDomain:
    @pytest.mark.parametrize("x", [0.0, -1.0, -1e-9, float("nan")])
    def test_ln_gamma_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            ln_gamma(x)

    @pytest.mark.parametrize("x", [0.0, -3.5, float("nan")])
    def test_digamma_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            digamma(x)


class TestOracleAgreement:
    def test_ln_gamma_against_series_oracle(self):
        for x in log_grid(X_MIN, X_MAX, 400):
            assert rel_err(ln_gamma(x), ln_gamma_series(x)) < 1e-12, x

    def test_digamma_against_series_oracle(self):
        for x in log_grid(X_MIN, X_MAX, 400):
            assert rel_err(digamma(x), digamma_series(x)) < 1e-10, x


class TestRecurrences:
    @given(st.floats(0.1, 100.0))
    @settings(max_examples=150, deadline=None)
    def test_digamma_recurrence(self, x):
        lhs = digamma(x + 1.0)
        rhs = digamma(x) + 1.0 / x
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(digamma(x)))

    @given(st.floats(0.1, 100.0))
    @settings(max_examples=150, deadline=None)
    def test_ln_gamma_recurrence(self, x):
        lhs = ln_gamma(x + 1.0)
        rhs = ln_gamma(x) + math.log(x)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(ln_gamma(x)))


def test_digamma_strictly_increasing_on_grid():
    xs = [0.5 + i * (49.5 / 299) for i in range(300)]
    vals = [digamma(x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))

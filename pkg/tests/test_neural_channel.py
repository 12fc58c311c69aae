import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hncsim.errors import ParameterError
from hncsim.neural_channel import (
    NATS_TO_BITS,
    NeuralChannelParams,
    capacity_neural,
    information_per_signal,
    sweep_input_rate,
)

from oracles import neural_capacity_mp, rel_err

# Stated baseline: 1 ms refractory period, 5 us latency spread.
DELTA = 1e-3
SIGMA = 5e-6


def params(a):
    return NeuralChannelParams(
        input_rate_pps=a, refractory_s=DELTA, latency_sigma_s=SIGMA
    )


class TestInformationPerSignal:
    def test_zero_rate_gives_zero(self):
        assert information_per_signal(0.0, SIGMA) == 0.0

    def test_printed_form_equals_simplified_value(self):
        # the printed expression reduces algebraically to a*sigma
        h = information_per_signal(100.0, SIGMA)
        assert abs(h - 100.0 * SIGMA) <= 1e-14

    def test_at_a_sigma_equal_ln2(self):
        a = math.log(2.0) / SIGMA
        h = information_per_signal(a, SIGMA)
        assert math.isclose(h, math.log(2.0), rel_tol=1e-14)

    @pytest.mark.parametrize("a", [0.0, 1.0, 100.0, 1e5, 2e8, 1e9])
    def test_reduction_identity_including_underflow_regime(self, a):
        # a = 1e9 drives exp(-a*sigma) to underflow; the identity must hold
        h = information_per_signal(a, SIGMA)
        t = a * SIGMA
        assert abs(h - t) <= 1e-13 * max(1.0, t)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ParameterError):
            information_per_signal(-1.0, SIGMA)
        with pytest.raises(ParameterError):
            information_per_signal(1.0, 0.0)


class TestCapacity:
    def test_zero_rate_is_exactly_zero(self):
        assert capacity_neural(params(0.0)) == 0.0

    def test_frozen_baseline_point(self):
        # a=100: capacity = 100*H/1.1 with H = 5e-4; frozen at 50 digits
        got = capacity_neural(params(100.0))
        assert rel_err(got, "0.045454545454545455") < 1e-12
        assert rel_err(got, neural_capacity_mp(100.0, DELTA, SIGMA)) < 1e-12

    def test_prefactor_approaches_refractory_limit(self):
        a = 1e9
        prefactor = a / (1.0 + a * DELTA)
        assert abs(prefactor - 1.0 / DELTA) < 1e-6 / DELTA

    @given(st.floats(1e-3, 1e12))
    @settings(max_examples=150, deadline=None)
    def test_prefactor_bound(self, a):
        assert a / (1.0 + a * DELTA) < 1.0 / DELTA

    def test_nats_to_bits_constant(self):
        assert math.isclose(NATS_TO_BITS, 1.0 / math.log(2.0), rel_tol=1e-15)

    def test_invariants(self):
        with pytest.raises(ParameterError):
            NeuralChannelParams(input_rate_pps=-1.0, refractory_s=DELTA, latency_sigma_s=SIGMA)
        with pytest.raises(ParameterError):
            NeuralChannelParams(input_rate_pps=1.0, refractory_s=0.0, latency_sigma_s=SIGMA)
        with pytest.raises(ParameterError):
            NeuralChannelParams(input_rate_pps=1.0, refractory_s=DELTA, latency_sigma_s=-1.0)


class TestSweep:
    def test_zero_grid(self):
        assert sweep_input_rate(params(0.0), [0.0]) == [(0.0, 0.0)]

    def test_pointwise_equality(self):
        grid = [0.0, 100.0, 1000.0, 5000.0]
        pairs = sweep_input_rate(params(0.0), grid)
        for a, c in pairs:
            assert c == capacity_neural(params(a))

    def test_strictly_increasing_over_baseline_grid(self):
        grid = [i * 50.0 for i in range(101)]  # 0..5000 pulses/s
        pairs = sweep_input_rate(params(0.0), grid)
        caps = [c for _, c in pairs]
        assert pairs[0] == (0.0, 0.0)
        assert all(b > a for a, b in zip(caps, caps[1:]))

    @pytest.mark.parametrize("grid", [[], [-1.0, 10.0], [10.0, 10.0], [20.0, 10.0]])
    def test_grid_validation(self, grid):
        with pytest.raises(ParameterError):
            sweep_input_rate(params(0.0), grid)

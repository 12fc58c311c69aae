import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hncsim.errors import ParameterError
from hncsim.thz_channel import (
    SPEED_OF_LIGHT,
    PathLossModel,
    SimplifiedThzParams,
    ThzChannelParams,
    capacity_simplified,
    capacity_sum,
    free_space_path_loss,
    sweep_distance,
)


class _UnityLoss(PathLossModel):
    """Degenerate model for additivity checks: no attenuation at all."""

    def attenuation(self, freq_hz, distance_m):
        return 1.0


def _grid_params(**overrides):
    base = dict(
        f_low_hz=1e11,
        f_high_hz=1.1e12,
        subband_hz=1e11,
        distance_m=0.1,
        tx_psd_w_per_hz=1e-15,
        noise_psd_w_per_hz=4.141947e-21,
    )
    base.update(overrides)
    return ThzChannelParams(**base)


class TestPathLoss:
    def test_value_at_1thz_1m(self):
        # frozen from a 50-digit evaluation of (4*pi*d*f/c)^2
        assert math.isclose(
            free_space_path_loss(1e12, 1.0), 1757026542.4158582, rel_tol=1e-12
        )

    def test_unit_argument(self):
        f = 1e9
        d = SPEED_OF_LIGHT / (4.0 * math.pi * f)
        assert math.isclose(free_space_path_loss(f, d), 1.0, rel_tol=1e-12)

    def test_zero_absorption_equals_default_model(self):
        a = PathLossModel()
        b = PathLossModel(absorption_per_m=0.0)
        for f, d in ((1e11, 0.01), (1e12, 0.5), (3e12, 2.0)):
            assert a.attenuation(f, d) == b.attenuation(f, d)

    def test_absorption_multiplies_exponentially(self):
        m = PathLossModel(absorption_per_m=3.0)
        f, d = 1e12, 0.4
        want = free_space_path_loss(f, d) * math.exp(3.0 * d)
        assert math.isclose(m.attenuation(f, d), want, rel_tol=1e-12)

    @pytest.mark.parametrize("f,d", [(0.0, 1.0), (-1e12, 1.0), (1e12, 0.0), (1e12, -2.0)])
    def test_rejects_nonpositive(self, f, d):
        with pytest.raises(ParameterError):
            free_space_path_loss(f, d)

    def test_rejects_negative_absorption(self):
        with pytest.raises(ParameterError):
            PathLossModel(absorption_per_m=-0.1)


class TestCapacitySum:
    def test_single_band_unit_snr_gives_delta_f(self):
        # pick tx so that tx / (A * noise) == 1 at the band center
        f_lo, df, d = 1e12, 1e9, 0.05
        center = f_lo + 0.5 * df
        a = free_space_path_loss(center, d)
        noise = 1e-20
        p = _grid_params(
            f_low_hz=f_lo,
            f_high_hz=f_lo + df,
            subband_hz=df,
            distance_m=d,
            tx_psd_w_per_hz=noise * a,
            noise_psd_w_per_hz=noise,
        )
        assert math.isclose(capacity_sum(p), df, rel_tol=1e-12)

    def test_two_equal_bands_double_one_band(self):
        # with attenuation forced to 1 both bands contribute identically
        one = _grid_params(
            f_low_hz=1e12, f_high_hz=1.1e12, subband_hz=1e11, path_loss=_UnityLoss()
        )
        two = _grid_params(
            f_low_hz=1e12, f_high_hz=1.2e12, subband_hz=1e11, path_loss=_UnityLoss()
        )
        assert capacity_sum(two) == 2.0 * capacity_sum(one)

    def test_ten_band_frozen_oracle(self):
        # frozen from a 50-digit re-summation of the same grid
        p = _grid_params()
        assert p.n_subbands == 10
        assert math.isclose(capacity_sum(p), 143443562221.24507, rel_tol=1e-12)

    def test_single_band_matches_simplified(self):
        p = _grid_params(f_low_hz=1e12, f_high_hz=1.1e12, subband_hz=1e11)
        center = 1e12 + 0.5 * 1e11
        simplified = SimplifiedThzParams(
            bandwidth_hz=1e11,
            snr=p.tx_psd_w_per_hz / p.noise_psd_w_per_hz,
            center_freq_hz=center,
            distance_m=p.distance_m,
        )
        assert math.isclose(
            capacity_sum(p), capacity_simplified(simplified), rel_tol=1e-12
        )

    def test_refinement_consistency(self):
        # midpoint-rule convergence: once the smooth free-space attenuation
        # is resolved (100 bands over the decade), halving the band width
        # moves the total by well under 1%
        coarse = _grid_params(subband_hz=1e10)
        fine = _grid_params(subband_hz=5e9)
        c0, c1 = capacity_sum(coarse), capacity_sum(fine)
        assert abs(c1 - c0) / c0 < 0.01

    @pytest.mark.parametrize(
        "bad",
        [
            dict(f_low_hz=0.0),
            dict(f_low_hz=2e12),  # f_low >= f_high
            dict(subband_hz=-1e9),
            dict(subband_hz=2e12),  # less than one full band
            dict(distance_m=0.0),
            dict(tx_psd_w_per_hz=-1e-15),
            dict(noise_psd_w_per_hz=0.0),
        ],
    )
    def test_invariant_violations(self, bad):
        with pytest.raises(ParameterError):
            _grid_params(**bad)


class TestCapacitySimplified:
    def test_snr_over_a_one_gives_b(self):
        f, d = 1e12, 0.02
        a = free_space_path_loss(f, d)
        p = SimplifiedThzParams(bandwidth_hz=1e9, snr=a, center_freq_hz=f, distance_m=d)
        assert math.isclose(capacity_simplified(p), 1e9, rel_tol=1e-12)

    def test_snr_over_a_three_gives_2b(self):
        f, d = 1e12, 0.02
        a = free_space_path_loss(f, d)
        p = SimplifiedThzParams(
            bandwidth_hz=1e9, snr=3.0 * a, center_freq_hz=f, distance_m=d
        )
        assert math.isclose(capacity_simplified(p), 2e9, rel_tol=1e-12)

    def test_frozen_oracle_point(self):
        # frozen from a 50-digit evaluation
        p = SimplifiedThzParams(
            bandwidth_hz=1e9, snr=1e10, center_freq_hz=1e12, distance_m=0.01
        )
        assert math.isclose(capacity_simplified(p), 15796529837.25209, rel_tol=1e-12)

    def test_invariants(self):
        with pytest.raises(ParameterError):
            SimplifiedThzParams(bandwidth_hz=1e9, snr=0.0, center_freq_hz=1e12, distance_m=1.0)


class TestMonotonicity:
    @given(st.floats(1e-3, 10.0), st.floats(1.01, 10.0))
    @settings(max_examples=80, deadline=None)
    def test_sum_decreasing_in_distance(self, d, factor):
        near = _grid_params(distance_m=d)
        far = _grid_params(distance_m=d * factor)
        assert capacity_sum(far) < capacity_sum(near)

    @given(st.floats(1e-3, 10.0), st.floats(1.01, 10.0))
    @settings(max_examples=80, deadline=None)
    def test_simplified_decreasing_in_distance(self, d, factor):
        def cap(dist):
            return capacity_simplified(
                SimplifiedThzParams(
                    bandwidth_hz=1e9, snr=1e10, center_freq_hz=1e12, distance_m=dist
                )
            )

        assert cap(d * factor) < cap(d)

    @given(st.floats(1e-18, 1e-12), st.floats(1.01, 100.0))
    @settings(max_examples=80, deadline=None)
    def test_sum_increasing_in_tx_psd(self, tx, factor):
        lo = _grid_params(tx_psd_w_per_hz=tx)
        hi = _grid_params(tx_psd_w_per_hz=tx * factor)
        assert capacity_sum(hi) > capacity_sum(lo)

    @given(st.floats(1.0, 1e12), st.floats(1.01, 100.0))
    @settings(max_examples=80, deadline=None)
    def test_simplified_increasing_in_snr(self, snr, factor):
        def cap(s):
            return capacity_simplified(
                SimplifiedThzParams(
                    bandwidth_hz=1e9, snr=s, center_freq_hz=1e12, distance_m=0.1
                )
            )

        assert cap(snr * factor) > cap(snr)


def test_sweep_distance_preserves_order_and_decreases():
    base = SimplifiedThzParams(
        bandwidth_hz=1e9, snr=1e10, center_freq_hz=1e12, distance_m=0.01
    )
    grid = [0.01 * (100.0) ** (i / 49) for i in range(50)]
    pairs = sweep_distance(base, grid)
    assert [d for d, _ in pairs] == grid
    caps = [c for _, c in pairs]
    assert all(b < a for a, b in zip(caps, caps[1:]))


def test_sweep_distance_rejects_empty_grid():
    base = SimplifiedThzParams(
        bandwidth_hz=1e9, snr=1e10, center_freq_hz=1e12, distance_m=0.01
    )
    with pytest.raises(ParameterError):
        sweep_distance(base, [])

"""THz electromagnetic sub-channel capacity.

The THz band is strongly frequency selective, so the wideband capacity is
evaluated as a sum of per-sub-band Shannon terms over a regular frequency
grid.  A single-band simplified form is provided for distance sweeps.

Path loss is treated as an attenuation factor that always divides the
signal term (capacity must fall with distance); an optional exponential
term exp(k*d) models bulk molecular absorption on top of spreading loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

SPEED_OF_LIGHT = 299_792_458.0  # m/s


def free_space_path_loss(freq_hz: float, distance_m: float) -> float:
    """Spreading-loss attenuation factor (4*pi*d*f/c)^2, dimensionless."""
    if freq_hz <= 0.0 or distance_m <= 0.0:
        raise ParameterError(
            f"free_space_path_loss needs f > 0 and d > 0, got f={freq_hz!r}, d={distance_m!r}"
        )
    ratio = 4.0 * math.pi * distance_m * freq_hz / SPEED_OF_LIGHT
    return ratio * ratio


@dataclass(frozen=True)
class PathLossModel:
    """Attenuation model: free-space spreading, optionally scaled by
    exp(absorption_per_m * d).  absorption_per_m = 0 is plain free space."""

    absorption_per_m: float = 0.0

    def __post_init__(self):
        if self.absorption_per_m < 0.0 or not math.isfinite(self.absorption_per_m):
            raise ParameterError(
                f"absorption coefficient must be finite and >= 0, got {self.absorption_per_m!r}"
            )

    def attenuation(self, freq_hz: float, distance_m: float) -> float:
        a = free_space_path_loss(freq_hz, distance_m)
        if self.absorption_per_m > 0.0:
            a *= math.exp(self.absorption_per_m * distance_m)
        return a


@dataclass(frozen=True)
class ThzChannelParams:
    """Sub-band grid with flat transmit and noise PSDs.

    Sub-band i covers [f_low + i*subband_hz, f_low + (i+1)*subband_hz] and is
    evaluated at its midpoint; a trailing partial band is dropped.
    """

    f_low_hz: float
    f_high_hz: float
    subband_hz: float
    distance_m: float
    tx_psd_w_per_hz: float
    noise_psd_w_per_hz: float
    path_loss: PathLossModel = PathLossModel()

    def __post_init__(self):
        if not (0.0 < self.f_low_hz < self.f_high_hz):
            raise ParameterError(
                f"need 0 < f_low < f_high, got {self.f_low_hz!r}, {self.f_high_hz!r}"
            )
        if self.subband_hz <= 0.0:
            raise ParameterError(f"subband width must be > 0, got {self.subband_hz!r}")
        if (self.f_high_hz - self.f_low_hz) / self.subband_hz < 1.0:
            raise ParameterError("band must contain at least one full sub-band")
        for name in ("distance_m", "tx_psd_w_per_hz", "noise_psd_w_per_hz"):
            v = getattr(self, name)
            if v <= 0.0 or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")

    @property
    def n_subbands(self) -> int:
        return int(math.floor((self.f_high_hz - self.f_low_hz) / self.subband_hz + 1e-9))

    def band_centers(self) -> list[float]:
        return [
            self.f_low_hz + (i + 0.5) * self.subband_hz for i in range(self.n_subbands)
        ]


@dataclass(frozen=True)
class SimplifiedThzParams:
    """Single-band form: capacity = B * log2(1 + SNR / A(f_c, d))."""

    bandwidth_hz: float
    snr: float
    center_freq_hz: float
    distance_m: float
    path_loss: PathLossModel = PathLossModel()

    def __post_init__(self):
        for name in ("bandwidth_hz", "snr", "center_freq_hz", "distance_m"):
            v = getattr(self, name)
            if v <= 0.0 or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")


def capacity_sum(params: ThzChannelParams) -> float:
    """Wideband capacity in bits/s: sum over sub-bands of
    subband_hz * log2(1 + tx_psd / (A(f_i, d) * noise_psd))."""
    snr_flat = params.tx_psd_w_per_hz / params.noise_psd_w_per_hz
    total = 0.0
    for f_i in params.band_centers():
        a = params.path_loss.attenuation(f_i, params.distance_m)
        total += params.subband_hz * math.log2(1.0 + snr_flat / a)
    return total


def capacity_simplified(params: SimplifiedThzParams) -> float:
    """Single-band capacity in bits/s."""
    a = params.path_loss.attenuation(params.center_freq_hz, params.distance_m)
    return params.bandwidth_hz * math.log2(1.0 + params.snr / a)


def sweep_distance(
    base: SimplifiedThzParams, distances_m: list[float]
) -> list[tuple[float, float]]:
    """Evaluate capacity_simplified across a distance grid, order preserved."""
    if not distances_m:
        raise ParameterError("distance grid must be nonempty")
    out = []
    for d in distances_m:
        p = SimplifiedThzParams(
            bandwidth_hz=base.bandwidth_hz,
            snr=base.snr,
            center_freq_hz=base.center_freq_hz,
            distance_m=d,
            path_loss=base.path_loss,
        )
        out.append((d, capacity_simplified(p)))
    return out

"""Neural (spike-train) sub-channel capacity.

The per-signal information H uses natural logs, so the rate a*H/(1 + a*delta)
is in nats/s; NATS_TO_BITS converts where a bits/s figure is reported.

Note: the printed form of H reduces algebraically to a*sigma, which makes
the capacity grow without saturation as the input rate rises.  The formula
is implemented exactly as printed and the reduction is documented by a
test rather than patched over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

#: Multiply a nats/s rate by this to get bits/s.
NATS_TO_BITS = 1.0 / math.log(2.0)


@dataclass(frozen=True)
class NeuralChannelParams:
    input_rate_pps: float  # average input rate, pulses per second
    refractory_s: float  # minimum time for a neuron to become responsive again
    latency_sigma_s: float  # standard deviation of response latency

    def __post_init__(self):
        if self.input_rate_pps < 0.0 or not math.isfinite(self.input_rate_pps):
            raise ParameterError(
                f"input_rate_pps must be finite and >= 0, got {self.input_rate_pps!r}"
            )
        for name in ("refractory_s", "latency_sigma_s"):
            v = getattr(self, name)
            if v <= 0.0 or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")


def information_per_signal(input_rate_pps: float, latency_sigma_s: float) -> float:
    """Information per signal in nats:

        H = a*sigma*e^(-a*sigma) - (1 - e^(-a*sigma)) * ln(e^(-a*sigma))

    computed exactly as printed.
    """
    if input_rate_pps < 0.0:
        raise ParameterError(f"input rate must be >= 0, got {input_rate_pps!r}")
    if latency_sigma_s <= 0.0:
        raise ParameterError(f"latency sigma must be > 0, got {latency_sigma_s!r}")
    t = input_rate_pps * latency_sigma_s
    u = math.exp(-t)
    # exp underflows to 0 for t > ~745; ln of the inner expression is then
    # exactly -t, which keeps the printed form finite.
    log_u = math.log(u) if u > 0.0 else -t
    return t * u - (1.0 - u) * log_u


def capacity_neural(params: NeuralChannelParams) -> float:
    """Spike-train capacity a*H/(1 + a*delta) in nats/s; 0 at zero rate."""
    a = params.input_rate_pps
    if a == 0.0:
        return 0.0
    h = information_per_signal(a, params.latency_sigma_s)
    return a * h / (1.0 + a * params.refractory_s)


def sweep_input_rate(
    base: NeuralChannelParams, rate_grid_pps: list[float]
) -> list[tuple[float, float]]:
    """Evaluate capacity_neural across an input-rate grid, order preserved."""
    if not rate_grid_pps:
        raise ParameterError("rate grid must be nonempty")
    if rate_grid_pps[0] < 0.0:
        raise ParameterError("rate grid must be nonnegative")
    if any(b <= a for a, b in zip(rate_grid_pps, rate_grid_pps[1:])):
        raise ParameterError("rate grid must be strictly increasing")
    out = []
    for a in rate_grid_pps:
        p = NeuralChannelParams(
            input_rate_pps=a,
            refractory_s=base.refractory_s,
            latency_sigma_s=base.latency_sigma_s,
        )
        out.append((a, capacity_neural(p)))
    return out

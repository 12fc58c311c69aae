"""Discrete-event behavioral simulation of the end-to-end relay pipeline.

One simulated transmission pushes an on-off-keyed bit stream through four
stages, one symbol period per bit:

  pulses -> charge-threshold relay (molecule release) -> 3-D diffusion to an
  absorbing spherical detector -> ion release + probabilistic vesicle firing
  (spike) -> per-window spike-count decoding.

Each relay is a threshold-and-reset state machine with normalized,
configurable parameters; no electrical circuit quantities are modeled.
Molecule propagation is pure diffusion: a molecule ever reaches the
detector with probability R_d/d_2, and the arrival time given a hit follows
the one-sided stable (Levy) first-passage law with scale (d_2-R_d)^2/(2D).
Arrivals later than max_wait, or later than the symbol window they belong
to, are dropped (no intersymbol interference is carried over).

Everything is reproducible from the seed: one generator drives all draws in
a fixed per-symbol order, and the number of draws per stage never depends
on drawn values, so runs with a common seed are coupled across parameter
changes (useful for monotonicity checks).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import ParameterError, SimulationInconsistencyError


class EventKind(enum.Enum):
    PULSE_SENT = "PulseSent"
    CHARGE_THRESHOLD_CROSSED = "ChargeThresholdCrossed"
    MOLECULES_RELEASED = "MoleculesReleased"
    MOLECULE_ARRIVED = "MoleculeArrived"
    IONS_RELEASED = "IonsReleased"
    VESICLE_FIRED = "VesicleFired"
    SPIKE_EMITTED = "SpikeEmitted"
    BIT_DECODED = "BitDecoded"


class TraceEvent(NamedTuple):
    time_s: float
    kind: EventKind
    payload: int


@dataclass(frozen=True)
class RelayConfig:
    """Normalized relay parameters for all four interface stages."""

    t2m_charge_threshold: float = 1.0  # charge units to trigger a release
    t2m_charge_per_pulse: float = 1.0
    t2m_molecules_per_release: int = 100
    pulses_per_bit: int = 1  # burst length used to key a 1-bit
    m2n_detect_threshold: int = 5  # molecule count per window to fire
    m2n_ions_per_release: int = 1000
    vesicle_release_prob: float = 0.5  # per vesicle, per ion-release event
    vesicle_count: int = 4
    molecules_per_vesicle: int = 1000
    n2m_decision_threshold: int = 1  # spikes per window decoding to a 1

    def __post_init__(self):
        for name in ("t2m_charge_threshold", "t2m_charge_per_pulse"):
            v = getattr(self, name)
            if v <= 0.0 or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")
        for name in (
            "t2m_molecules_per_release",
            "pulses_per_bit",
            "m2n_detect_threshold",
            "m2n_ions_per_release",
            "vesicle_count",
            "molecules_per_vesicle",
            "n2m_decision_threshold",
        ):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ParameterError(f"{name} must be an integer >= 1, got {v!r}")
        if not 0.0 <= self.vesicle_release_prob <= 1.0:
            raise ParameterError(
                f"vesicle_release_prob must be in [0, 1], got {self.vesicle_release_prob!r}"
            )


@dataclass(frozen=True)
class PropagationConfig:
    """Diffusive propagation geometry and timing."""

    diffusion_m2s: float = 1e-9
    distance_m: float = 1e-4
    detector_radius_m: float = 1e-5
    symbol_period_s: float = 30.0
    max_wait_s: float = 30.0  # arrival cutoff measured from the release

    def __post_init__(self):
        for name in (
            "diffusion_m2s",
            "distance_m",
            "detector_radius_m",
            "symbol_period_s",
            "max_wait_s",
        ):
            v = getattr(self, name)
            if v <= 0.0 or not math.isfinite(v):
                raise ParameterError(f"{name} must be finite and > 0, got {v!r}")
        if self.detector_radius_m >= self.distance_m:
            raise ParameterError(
                "detector radius must be smaller than the propagation distance"
            )

    @property
    def hit_probability(self) -> float:
        """Probability that a molecule ever reaches the absorbing detector."""
        return self.detector_radius_m / self.distance_m


@dataclass
class LinkTrace:
    """Time-ordered event log of one simulated transmission."""

    events: list[TraceEvent] = field(default_factory=list)
    sent_bits: list[int] = field(default_factory=list)
    decoded_bits: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class SimResult:
    ber: float
    throughput_bps: float
    trials: int
    seed: int


def simulate_t2m(
    pulse_times_s: Sequence[float], cfg: RelayConfig
) -> list[tuple[float, int]]:
    """Charge-accumulate pulses; each threshold crossing releases molecules.

    Returns (release_time_s, molecule_count) per crossing.  The accumulator
    resets to zero on release (capacitor fully discharges).
    """
    if any(b < a for a, b in zip(pulse_times_s, pulse_times_s[1:])):
        raise ParameterError("pulse times must be sorted")
    releases = []
    charge = 0.0
    for t in pulse_times_s:
        charge += cfg.t2m_charge_per_pulse
        if charge >= cfg.t2m_charge_threshold:
            releases.append((t, cfg.t2m_molecules_per_release))
            charge = 0.0
    return releases


def _first_passage_times(
    prop: PropagationConfig, rng: np.random.Generator, n_molecules: int
) -> np.ndarray:
    """Per-molecule arrival delays; NaN marks molecules that never arrive.

    Draw counts are fixed (n uniforms + n normals) regardless of outcomes so
    that common-seed runs stay aligned across config changes downstream.
    """
    gap = prop.distance_m - prop.detector_radius_m
    scale = gap * gap / (2.0 * prop.diffusion_m2s)
    hit = rng.random(n_molecules) < prop.hit_probability
    z = rng.standard_normal(n_molecules)
    with np.errstate(divide="ignore"):
        t = scale / (z * z)
    t[~hit] = np.nan
    t[t > prop.max_wait_s] = np.nan
    return t


def sample_first_passage(
    prop: PropagationConfig, rng_seed: int, n_molecules: int
) -> list[Optional[float]]:
    """Independent arrival outcomes for n molecules released at time zero.

    Each molecule arrives with probability R_d/d_2 and, conditioned on
    arriving, after a Levy-distributed delay; None means lost (never hits
    the detector, or arrives after max_wait).
    """
    if n_molecules < 1:
        raise ParameterError(f"n_molecules must be >= 1, got {n_molecules!r}")
    t = _first_passage_times(prop, np.random.default_rng(rng_seed), n_molecules)
    return [None if math.isnan(v) else float(v) for v in t.tolist()]


def _window_index(time_s: float, window_s: float) -> int:
    """Index of the half-open window (k*w, (k+1)*w] containing time_s.

    Events generated at exact window ends belong to the window they close;
    the small relative tolerance absorbs float jitter in k*w arithmetic.
    """
    return int(math.ceil(time_s / window_s - 1e-9)) - 1


def _vesicle_draw(
    cfg: RelayConfig, rng: np.random.Generator
) -> tuple[int, bool]:
    """(number of vesicles fired, any fired) for one ion-release event."""
    fired = int(np.count_nonzero(rng.random(cfg.vesicle_count) < cfg.vesicle_release_prob))
    return fired, fired > 0


def simulate_m2n_and_synapse(
    arrival_times_s: Sequence[float],
    window_s: float,
    cfg: RelayConfig,
    rng_seed: int,
) -> list[float]:
    """Molecule arrivals -> ion releases -> vesicle firing -> spike times.

    Per window: if the arrival count reaches m2n_detect_threshold, Ca ions
    are released and each vesicle independently fires with
    vesicle_release_prob; at least one firing emits a spike at the window
    end.  Returns spike times, deterministic for a given seed.
    """
    if window_s <= 0.0:
        raise ParameterError(f"window must be > 0, got {window_s!r}")
    if any(b < a for a, b in zip(arrival_times_s, arrival_times_s[1:])):
        raise ParameterError("arrival times must be sorted")
    rng = np.random.default_rng(rng_seed)
    counts: dict[int, int] = {}
    for t in arrival_times_s:
        k = _window_index(t, window_s)
        counts[k] = counts.get(k, 0) + 1
    spikes = []
    for k in sorted(counts):
        if counts[k] >= cfg.m2n_detect_threshold:
            _, any_fired = _vesicle_draw(cfg, rng)
            if any_fired:
                spikes.append((k + 1) * window_s)
    return spikes


def decode_n2m(
    spike_times_s: Sequence[float],
    window_s: float,
    n_windows: int,
    cfg: RelayConfig,
) -> list[int]:
    """Per-window threshold decoding: bit k = 1 when the spike count in
    window k reaches n2m_decision_threshold."""
    if window_s <= 0.0:
        raise ParameterError(f"window must be > 0, got {window_s!r}")
    if n_windows < 1:
        raise ParameterError(f"n_windows must be >= 1, got {n_windows!r}")
    counts = [0] * n_windows
    for t in spike_times_s:
        k = _window_index(t, window_s)
        if 0 <= k < n_windows:
            counts[k] += 1
    return [1 if c >= cfg.n2m_decision_threshold else 0 for c in counts]


def run_link(
    bits: Sequence[int],
    relay: RelayConfig,
    prop: PropagationConfig,
    seed: int,
) -> tuple[SimResult, LinkTrace]:
    """Simulate one on-off-keyed transmission of `bits`, one bit per symbol
    period.  Returns the aggregate result and the full event trace.

    Raises SimulationInconsistencyError when a full burst cannot reach the
    T2M charge threshold (a 1-bit could never release molecules).
    """
    bits = [int(b) for b in bits]
    if not bits:
        raise ParameterError("bit sequence must be nonempty")
    if any(b not in (0, 1) for b in bits):
        raise ParameterError("bits must be 0 or 1")
    if relay.pulses_per_bit * relay.t2m_charge_per_pulse < relay.t2m_charge_threshold:
        raise SimulationInconsistencyError(
            f"burst of {relay.pulses_per_bit} pulses x {relay.t2m_charge_per_pulse} "
            f"charge cannot reach the T2M threshold {relay.t2m_charge_threshold}"
        )

    rng = np.random.default_rng(seed)
    period = prop.symbol_period_s
    trace = LinkTrace(sent_bits=list(bits))
    decoded = []
    burst_spacing = 0.1 * period / relay.pulses_per_bit

    for k, bit in enumerate(bits):
        t0 = k * period
        t_end = (k + 1) * period
        spike_count = 0
        if bit == 1:
            symbol_events = []
            pulse_times = [t0 + j * burst_spacing for j in range(relay.pulses_per_bit)]
            releases = []
            charge = 0.0
            for t in pulse_times:
                symbol_events.append(TraceEvent(t, EventKind.PULSE_SENT, 1))
                charge += relay.t2m_charge_per_pulse
                if charge >= relay.t2m_charge_threshold:
                    symbol_events.append(
                        TraceEvent(t, EventKind.CHARGE_THRESHOLD_CROSSED, 1)
                    )
                    symbol_events.append(
                        TraceEvent(
                            t,
                            EventKind.MOLECULES_RELEASED,
                            relay.t2m_molecules_per_release,
                        )
                    )
                    releases.append((t, relay.t2m_molecules_per_release))
                    charge = 0.0

            arrivals = []
            for t_rel, n_mol in releases:
                delays = _first_passage_times(prop, rng, n_mol)
                for dt in delays[~np.isnan(delays)].tolist():
                    t_arr = t_rel + dt
                    if t_arr <= t_end:  # later arrivals are dropped, no ISI
                        arrivals.append(t_arr)
            arrivals.sort()

            crossed = False
            for i, t_arr in enumerate(arrivals):
                symbol_events.append(TraceEvent(t_arr, EventKind.MOLECULE_ARRIVED, 1))
                if not crossed and i + 1 == relay.m2n_detect_threshold:
                    crossed = True
                    symbol_events.append(
                        TraceEvent(
                            t_arr, EventKind.IONS_RELEASED, relay.m2n_ions_per_release
                        )
                    )
            if crossed:
                fired, any_fired = _vesicle_draw(relay, rng)
                for _ in range(fired):
                    symbol_events.append(
                        TraceEvent(
                            t_end, EventKind.VESICLE_FIRED, relay.molecules_per_vesicle
                        )
                    )
                if any_fired:
                    symbol_events.append(TraceEvent(t_end, EventKind.SPIKE_EMITTED, 1))
                    spike_count = 1

            # an early arrival can predate a later burst release; the stable
            # sort restores the time order while keeping causal ties intact
            symbol_events.sort(key=lambda e: e.time_s)
            trace.events.extend(symbol_events)

        decoded_bit = 1 if spike_count >= relay.n2m_decision_threshold else 0
        decoded.append(decoded_bit)
        trace.events.append(TraceEvent(t_end, EventKind.BIT_DECODED, decoded_bit))

    trace.decoded_bits = decoded
    errors = sum(1 for s, d in zip(bits, decoded) if s != d)
    ber = errors / len(bits)
    # Throughput: correctly delivered bits per second of simulated link time.
    # One symbol carries one bit over one period and no framing overhead is
    # modeled, so throughput = (1 - BER) / symbol_period.
    throughput = (1.0 - ber) / period
    result = SimResult(
        ber=ber, throughput_bps=throughput, trials=len(bits), seed=seed
    )
    return result, trace

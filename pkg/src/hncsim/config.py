"""Key-value run configuration.

Config files are UTF-8 ``key = value`` lines; ``#`` starts a comment and
blank lines are ignored.  Every key has a documented default (see README
for the provenance tags), so an empty or absent file is a valid
configuration.  Unknown keys, malformed values, and keys explicitly set to
an empty value are rejected with the offending key named.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, ParameterError
from .link_sim import PropagationConfig, RelayConfig
from .molecular_channel import (
    SHAPE_CALIBRATION,
    LogMode,
    MolecularChannelParams,
)
from .neural_channel import NeuralChannelParams
from .thz_channel import PathLossModel, SimplifiedThzParams, ThzChannelParams

DEFAULTS: dict[str, float | int | str] = {
    "mode": "verbatim",
    "seed": 1,
    "out.dir": ".",
    # Wideband THz grid (capacity report)
    "thz.f_low_hz": 1e11,
    "thz.f_high_hz": 1.1e12,
    "thz.subband_hz": 1e11,
    "thz.distance_m": 0.1,
    "thz.tx_psd_w_per_hz": 1e-15,
    "thz.noise_psd_w_per_hz": 4.141947e-21,  # kT at 300 K
    "thz.absorption_per_m": 0.0,
    # Molecular channel (capacity report)
    "molecular.bandwidth_hz": 50.0,
    "molecular.mean_power_w": 1e-12,
    "molecular.temperature_k": 300.0,
    "molecular.diffusion_m2s": 1e-9,
    "molecular.distance_m": 1e-4,
    "molecular.detector_radius_m": 1e-5,
    "molecular.tau_over_w": 0.5,  # interval = tau_over_w / bandwidth
    # Neural channel (capacity report)
    "neural.input_rate_pps": 100.0,
    "neural.refractory_s": 1e-3,
    "neural.latency_sigma_s": 5e-6,
    # Distance sweep (single-band THz)
    "fig8.center_freq_hz": 1e12,
    "fig8.bandwidth_hz": 1e9,
    "fig8.snr": 1e10,
    "fig8.absorption_per_m": 0.0,
    "fig8.d_min_m": 0.01,
    "fig8.d_max_m": 1.0,
    "fig8.points": 100,
    # Bandwidth sweep (molecular); radius/interval default to the documented
    # shape calibration, independently of the single-point molecular.* keys.
    "fig9.w_min_hz": 1.0,
    "fig9.w_max_hz": 200.0,
    "fig9.points": 200,
    "fig9.detector_radius_m": SHAPE_CALIBRATION["detector_radius_m"],
    "fig9.tau_over_w": SHAPE_CALIBRATION["tau_over_w"],
    # Input-rate sweep (neural)
    "fig10.a_min_pps": 0.0,
    "fig10.a_max_pps": 5000.0,
    "fig10.points": 100,
    # Relay state machines
    "relay.t2m_charge_threshold": 1.0,
    "relay.t2m_charge_per_pulse": 1.0,
    "relay.t2m_molecules_per_release": 100,
    "relay.pulses_per_bit": 1,
    "relay.m2n_detect_threshold": 5,
    "relay.m2n_ions_per_release": 1000,
    "relay.vesicle_release_prob": 0.5,
    "relay.vesicle_count": 4,
    "relay.molecules_per_vesicle": 1000,
    "relay.n2m_decision_threshold": 1,
    # Diffusive propagation for the simulator
    "prop.diffusion_m2s": 1e-9,
    "prop.distance_m": 1e-4,
    "prop.detector_radius_m": 1e-5,
    "prop.symbol_period_s": 30.0,
    "prop.max_wait_s": 30.0,
    # Simulation run
    "sim.bits": 200,
}

_MODES = {"verbatim": LogMode.VERBATIM, "nats": LogMode.NATS_CONSISTENT}


def _parse_value(key: str, raw: str):
    default = DEFAULTS[key]
    if isinstance(default, str):
        return raw
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            try:
                f = float(raw)
            except ValueError:
                raise ConfigError(key, f"expected an integer, got {raw!r}") from None
            if not f.is_integer():
                raise ConfigError(key, f"expected an integer, got {raw!r}") from None
            return int(f)
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(key, f"expected a number, got {raw!r}") from None


@dataclass
class RunConfig:
    """Effective configuration: documented defaults plus file/flag overrides."""

    values: dict[str, float | int | str] = field(
        default_factory=lambda: dict(DEFAULTS)
    )

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        cfg = cls()
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ConfigError(
                    stripped.split()[0],
                    f"line {lineno} is not a 'key = value' assignment",
                )
            key, raw = (part.strip() for part in stripped.split("=", 1))
            if key not in DEFAULTS:
                raise ConfigError(key, "unknown key")
            if raw == "":
                raise ConfigError(
                    key, "set but empty; give it a value or remove the line"
                )
            cfg.values[key] = _parse_value(key, raw)
        return cfg

    @classmethod
    def from_file(cls, path: str | Path) -> "RunConfig":
        p = Path(path)
        if not p.is_file():
            raise ConfigError(str(path), "config file not found")
        return cls.from_text(p.read_text(encoding="utf-8"))

    def override(self, key: str, value) -> None:
        if key not in DEFAULTS:
            raise ConfigError(key, "unknown key")
        self.values[key] = value

    def __getitem__(self, key: str):
        return self.values[key]

    def render(self) -> str:
        """Deterministic 'key = value' listing of the effective config."""
        lines = []
        for key in sorted(self.values):
            v = self.values[key]
            lines.append(f"{key} = {v!r}" if isinstance(v, float) else f"{key} = {v}")
        return "\n".join(lines) + "\n"

    def render_inline(self) -> str:
        """Single-line rendering used in CSV provenance comments."""
        parts = []
        for key in sorted(self.values):
            v = self.values[key]
            parts.append(f"{key}={v!r}" if isinstance(v, float) else f"{key}={v}")
        return " ".join(parts)

    # ---- typed views -------------------------------------------------
    # Invariant violations surface as ConfigError (the value came from the
    # config), keyed by the section whose keys produced the bad parameter.

    @staticmethod
    def _build(section: str, ctor, **kwargs):
        try:
            return ctor(**kwargs)
        except ParameterError as exc:
            raise ConfigError(section, str(exc)) from exc

    @property
    def mode(self) -> LogMode:
        raw = str(self.values["mode"])
        if raw not in _MODES:
            raise ConfigError("mode", f"must be one of {sorted(_MODES)}, got {raw!r}")
        return _MODES[raw]

    @property
    def seed(self) -> int:
        return int(self.values["seed"])

    def thz_params(self) -> ThzChannelParams:
        loss = self._build(
            "thz.absorption_per_m",
            PathLossModel,
            absorption_per_m=float(self["thz.absorption_per_m"]),
        )
        return self._build(
            "thz",
            ThzChannelParams,
            f_low_hz=float(self["thz.f_low_hz"]),
            f_high_hz=float(self["thz.f_high_hz"]),
            subband_hz=float(self["thz.subband_hz"]),
            distance_m=float(self["thz.distance_m"]),
            tx_psd_w_per_hz=float(self["thz.tx_psd_w_per_hz"]),
            noise_psd_w_per_hz=float(self["thz.noise_psd_w_per_hz"]),
            path_loss=loss,
        )

    def fig8_params(self, distance_m: float) -> SimplifiedThzParams:
        loss = self._build(
            "fig8.absorption_per_m",
            PathLossModel,
            absorption_per_m=float(self["fig8.absorption_per_m"]),
        )
        return self._build(
            "fig8",
            SimplifiedThzParams,
            bandwidth_hz=float(self["fig8.bandwidth_hz"]),
            snr=float(self["fig8.snr"]),
            center_freq_hz=float(self["fig8.center_freq_hz"]),
            distance_m=distance_m,
            path_loss=loss,
        )

    def molecular_params(
        self,
        bandwidth_hz: float | None = None,
        detector_radius_m: float | None = None,
        tau_over_w: float | None = None,
    ) -> MolecularChannelParams:
        w = float(self["molecular.bandwidth_hz"]) if bandwidth_hz is None else bandwidth_hz
        r = (
            float(self["molecular.detector_radius_m"])
            if detector_radius_m is None
            else detector_radius_m
        )
        c = float(self["molecular.tau_over_w"]) if tau_over_w is None else tau_over_w
        return self._build(
            "molecular",
            MolecularChannelParams,
            bandwidth_hz=w,
            mean_power_w=float(self["molecular.mean_power_w"]),
            temperature_k=float(self["molecular.temperature_k"]),
            diffusion_m2s=float(self["molecular.diffusion_m2s"]),
            distance_m=float(self["molecular.distance_m"]),
            detector_radius_m=r,
            interval_s=c / w,
        )

    def neural_params(self, input_rate_pps: float | None = None) -> NeuralChannelParams:
        a = (
            float(self["neural.input_rate_pps"])
            if input_rate_pps is None
            else input_rate_pps
        )
        return self._build(
            "neural",
            NeuralChannelParams,
            input_rate_pps=a,
            refractory_s=float(self["neural.refractory_s"]),
            latency_sigma_s=float(self["neural.latency_sigma_s"]),
        )

    def relay_config(self) -> RelayConfig:
        return self._build(
            "relay",
            RelayConfig,
            t2m_charge_threshold=float(self["relay.t2m_charge_threshold"]),
            t2m_charge_per_pulse=float(self["relay.t2m_charge_per_pulse"]),
            t2m_molecules_per_release=int(self["relay.t2m_molecules_per_release"]),
            pulses_per_bit=int(self["relay.pulses_per_bit"]),
            m2n_detect_threshold=int(self["relay.m2n_detect_threshold"]),
            m2n_ions_per_release=int(self["relay.m2n_ions_per_release"]),
            vesicle_release_prob=float(self["relay.vesicle_release_prob"]),
            vesicle_count=int(self["relay.vesicle_count"]),
            molecules_per_vesicle=int(self["relay.molecules_per_vesicle"]),
            n2m_decision_threshold=int(self["relay.n2m_decision_threshold"]),
        )

    def prop_config(self) -> PropagationConfig:
        return self._build(
            "prop",
            PropagationConfig,
            diffusion_m2s=float(self["prop.diffusion_m2s"]),
            distance_m=float(self["prop.distance_m"]),
            detector_radius_m=float(self["prop.detector_radius_m"]),
            symbol_period_s=float(self["prop.symbol_period_s"]),
            max_wait_s=float(self["prop.max_wait_s"]),
        )

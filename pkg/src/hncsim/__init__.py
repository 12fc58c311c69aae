"""Capacity modeling and link simulation for hybrid nano communication.

Three sub-channels (THz electromagnetic, diffusion-molecular, neural
spike-train) are evaluated in closed form, composed into a series cascade
bound, and backed by a behavioral discrete-event simulator of the relay
pipeline connecting them.
"""

from .errors import (
    ConfigError,
    DomainError,
    ParameterError,
    SimulationInconsistencyError,
)
from .hybrid import Bottleneck, CapacityReport, cascade_capacity, full_report
from .link_sim import (
    EventKind,
    LinkTrace,
    PropagationConfig,
    RelayConfig,
    SimResult,
    decode_n2m,
    run_link,
    sample_first_passage,
    simulate_m2n_and_synapse,
    simulate_t2m,
)
from .molecular_channel import (
    LogMode,
    MolecularChannelParams,
    capacity_molecular,
    capacity_terms,
    gamma_argument,
    sweep_bandwidth,
)
from .neural_channel import (
    NATS_TO_BITS,
    NeuralChannelParams,
    capacity_neural,
    information_per_signal,
    sweep_input_rate,
)
from .specfun import digamma, ln_gamma
from .thz_channel import (
    PathLossModel,
    SimplifiedThzParams,
    ThzChannelParams,
    capacity_simplified,
    capacity_sum,
    free_space_path_loss,
    sweep_distance,
)

__version__ = "0.1.0"

__all__ = [
    "Bottleneck",
    "CapacityReport",
    "ConfigError",
    "DomainError",
    "EventKind",
    "LinkTrace",
    "LogMode",
    "MolecularChannelParams",
    "NATS_TO_BITS",
    "NeuralChannelParams",
    "ParameterError",
    "PathLossModel",
    "PropagationConfig",
    "RelayConfig",
    "SimResult",
    "SimplifiedThzParams",
    "SimulationInconsistencyError",
    "ThzChannelParams",
    "capacity_molecular",
    "capacity_neural",
    "capacity_simplified",
    "capacity_sum",
    "capacity_terms",
    "cascade_capacity",
    "decode_n2m",
    "digamma",
    "free_space_path_loss",
    "full_report",
    "gamma_argument",
    "information_per_signal",
    "ln_gamma",
    "run_link",
    "sample_first_passage",
    "simulate_m2n_and_synapse",
    "simulate_t2m",
    "sweep_bandwidth",
    "sweep_distance",
    "sweep_input_rate",
]

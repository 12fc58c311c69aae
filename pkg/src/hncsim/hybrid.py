"""Cascade composition of the three sub-channel capacities.

The end-to-end pipeline is a series connection, so its capacity bound is
min(C1, C2, C3).  The report treats that minimum as an *upper* bound on
whatever the full hybrid link can actually deliver (data-processing
direction); no mutual-information estimate of the end-to-end capacity
itself is computed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import molecular_channel, neural_channel, thz_channel
from .errors import ParameterError
from .molecular_channel import LogMode, MolecularChannelParams
from .neural_channel import NeuralChannelParams
from .thz_channel import SimplifiedThzParams, ThzChannelParams


class Bottleneck(enum.Enum):
    THZ = "thz"
    MOLECULAR = "molecular"
    NEURAL = "neural"


# Fixed tie-break order: first listed wins when capacities are equal.
_TIE_BREAK = (Bottleneck.MOLECULAR, Bottleneck.NEURAL, Bottleneck.THZ)


@dataclass(frozen=True)
class CapacityReport:
    c1_thz_bps: float
    c2_molecular_bps: float
    c3_neural_bps: float
    cascade_bps: float
    bottleneck: Bottleneck
    negative_thz: bool
    negative_molecular: bool
    negative_neural: bool


def cascade_capacity(
    c1_thz_bps: float, c2_molecular_bps: float, c3_neural_bps: float
) -> CapacityReport:
    """Compose three sub-channel capacities into the series bottleneck.

    Negative inputs are passed through unaltered and flagged.  Ties are
    broken molecular > neural > thz.
    """
    values = {
        Bottleneck.THZ: c1_thz_bps,
        Bottleneck.MOLECULAR: c2_molecular_bps,
        Bottleneck.NEURAL: c3_neural_bps,
    }
    for channel, v in values.items():
        if not math.isfinite(v):
            raise ParameterError(f"{channel.value} capacity is not finite: {v!r}")
    cascade = min(values.values())
    bottleneck = next(ch for ch in _TIE_BREAK if values[ch] == cascade)
    return CapacityReport(
        c1_thz_bps=c1_thz_bps,
        c2_molecular_bps=c2_molecular_bps,
        c3_neural_bps=c3_neural_bps,
        cascade_bps=cascade,
        bottleneck=bottleneck,
        negative_thz=c1_thz_bps < 0.0,
        negative_molecular=c2_molecular_bps < 0.0,
        negative_neural=c3_neural_bps < 0.0,
    )


def full_report(
    thz: ThzChannelParams | SimplifiedThzParams,
    mol: MolecularChannelParams,
    neu: NeuralChannelParams,
    mode: LogMode = LogMode.VERBATIM,
) -> CapacityReport:
    """Evaluate all three sub-channels and compose the cascade report.

    The neural capacity (natively nats/s) enters the report in bits/s.
    """
    if isinstance(thz, SimplifiedThzParams):
        c1 = thz_channel.capacity_simplified(thz)
    else:
        c1 = thz_channel.capacity_sum(thz)
    c2 = molecular_channel.capacity_molecular(mol, mode)
    c3 = neural_channel.capacity_neural(neu) * neural_channel.NATS_TO_BITS
    return cascade_capacity(c1, c2, c3)

"""Radio link physics: power conversions, free-space propagation, BER, packet loss.

All operations are pure functions; every value is carried in full double
precision and converted to percent only at reporting boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from fanetsim.topology import Topology, distance

# Propagation constant used throughout (not the CODATA value; the link
# budget is defined in terms of c = 3e8 exactly).
SPEED_OF_LIGHT_M_S = 3.0e8


class BerModel(Enum):
    """Exponential BER approximations for binary signaling over AWGN.

    EXP_HALF_SNR: ber = 0.5 * exp(-snr / 2)
    EXP_SNR:      ber = 0.5 * exp(-snr)

    Both take the SNR on a linear scale. EXP_HALF_SNR is the default and
    is the model behind every shipped default dataset.
    """

    EXP_HALF_SNR = "exp-half-snr"
    EXP_SNR = "exp-snr"


@dataclass(frozen=True)
class RadioParams:
    """Transmitter/receiver parameters shared by every link of a topology."""

    tx_power_dbm: float = 7.0
    noise_floor_dbm: float = -100.0
    frequency_hz: float = 2.4e9
    ber_model: BerModel = BerModel.EXP_HALF_SNR

    def __post_init__(self):
        if not self.frequency_hz > 0:
            raise ValueError("frequency_hz must be positive")


@dataclass(frozen=True)
class LinkQuality:
    """Full link-budget chain for one distance and packet size."""

    rx_power_dbm: float
    snr_db: float
    snr_linear: float
    ber: float
    loss_prob: float


def dbm_to_mw(power_dbm: float) -> float:
    return 10.0 ** (power_dbm / 10.0)


def mw_to_dbm(power_mw: float) -> float:
    if power_mw <= 0:
        raise ValueError("power must be positive to express in dBm")
    return 10.0 * math.log10(power_mw)


def friis_gain_linear(distance_m: float, frequency_hz: float) -> float:
    """Free-space power gain (wavelength / 4 pi d)^2; always < 1 in the far field."""
    if distance_m <= 0:
        raise ValueError("distance must be positive")
    if frequency_hz <= 0:
        raise ValueError("frequency must be positive")
    wavelength = SPEED_OF_LIGHT_M_S / frequency_hz
    ratio = wavelength / (4.0 * math.pi * distance_m)
    return ratio * ratio


def fspl_db(distance_m: float, frequency_hz: float) -> float:
    """Free-space path loss in dB: 20log10(d) + 20log10(f) + 20log10(4 pi / c).

    Grows by 20log10(2) ~ 6.02 dB per doubling of either distance or
    frequency, and equals -10log10(friis_gain_linear) by construction.
    """
    if distance_m <= 0:
        raise ValueError("distance must be positive")
    if frequency_hz <= 0:
        raise ValueError("frequency must be positive")
    return (
        20.0 * math.log10(distance_m)
        + 20.0 * math.log10(frequency_hz)
        + 20.0 * math.log10(4.0 * math.pi / SPEED_OF_LIGHT_M_S)
    )


def ber_from_snr(snr_linear: float, model: BerModel = BerModel.EXP_HALF_SNR) -> float:
    if snr_linear < 0:
        raise ValueError("linear SNR must be non-negative")
    if model is BerModel.EXP_HALF_SNR:
        return 0.5 * math.exp(-snr_linear / 2.0)
    return 0.5 * math.exp(-snr_linear)


def packet_loss_prob(ber: float, packet_size_bits: int) -> float:
    """Probability that at least one of packet_size_bits i.i.d. bits is corrupted."""
    if not 0.0 <= ber <= 1.0:
        raise ValueError("ber must lie in [0, 1]")
    if not isinstance(packet_size_bits, int) or packet_size_bits < 1:
        raise ValueError("packet_size_bits must be an integer >= 1")
    return 1.0 - (1.0 - ber) ** packet_size_bits


def link_quality(distance_m: float, radio: RadioParams, packet_size_bits: int) -> LinkQuality:
    """Chain TX power -> Friis gain -> RX power -> SNR -> BER -> packet loss."""
    if distance_m <= 0:
        raise ValueError("distance must be positive")
    gain = friis_gain_linear(distance_m, radio.frequency_hz)
    rx_power_mw = dbm_to_mw(radio.tx_power_dbm) * gain
    rx_power_dbm = mw_to_dbm(rx_power_mw)
    snr_db = rx_power_dbm - radio.noise_floor_dbm
    snr_linear = 10.0 ** (snr_db / 10.0)
    ber = ber_from_snr(snr_linear, radio.ber_model)
    loss_prob = packet_loss_prob(ber, packet_size_bits)
    return LinkQuality(rx_power_dbm, snr_db, snr_linear, ber, loss_prob)


def mean_pair_loss_percent(topology: Topology, radio: RadioParams, packet_size_bits: int) -> float:
    """Arithmetic mean of per-pair loss probabilities, in percent."""
    if not topology.pairs:
        raise ValueError("topology has no communicating pairs")
    total = 0.0
    for src, dst in topology.pairs:
        d = distance(topology, src, dst)
        total += link_quality(d, radio, packet_size_bits).loss_prob * 100.0
    return total / len(topology.pairs)

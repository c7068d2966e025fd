"""Experiment grids: mean packet loss across power, frequency, area, and swarm size.

Each sweep evaluates every (axis value, packet size) cell on deterministic
replicate topologies seeded base_seed + r, and reports the mean and
population standard deviation of the per-topology pair-mean loss.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations

import numpy as np

from fanetsim.link import RadioParams, mean_pair_loss_percent
from fanetsim.rng import MASK64
from fanetsim.topology import AreaSpec, Topology, generate_topology

DEFAULT_PACKET_SIZES = (10, 100, 1000, 10000)
DEFAULT_POWER_AXIS_DBM = (5.0, 7.0, 9.0)
DEFAULT_FREQUENCY_AXIS_HZ = (2.4e9, 5.8e9, 2.8e10)
DEFAULT_AREA_AXIS_M = (500.0, 1000.0, 1500.0, 2000.0, 3000.0)
DEFAULT_COUNT_AXIS = (5, 10, 20, 40, 80)


class SweepAxis(Enum):
    POWER_DBM = "power_dbm"
    FREQUENCY_HZ = "frequency_hz"
    AREA_SIDE_M = "area_side_m"
    UAV_COUNT = "uav_count"


@dataclass(frozen=True)
class SweepSpec:
    """One experiment grid: topology parameters, radio, packet sizes, swept axis."""

    base_seed: int
    axis: SweepAxis
    axis_values: tuple[float, ...]
    num_uavs: int = 20
    area: AreaSpec = AreaSpec(1500.0, 1500.0)
    num_pairs: int = 10
    radio: RadioParams = RadioParams()
    packet_sizes: tuple[int, ...] = DEFAULT_PACKET_SIZES
    replicates: int = 1

    def __post_init__(self):
        if not self.axis_values:
            raise ValueError("axis_values must be non-empty")
        if any(hi <= lo for lo, hi in zip(self.axis_values, self.axis_values[1:])):
            raise ValueError("axis_values must be strictly increasing")
        if not self.packet_sizes:
            raise ValueError("packet_sizes must be non-empty")
        if any(not isinstance(s, int) or s < 1 for s in self.packet_sizes):
            raise ValueError("packet sizes must be integers >= 1")
        if any(hi <= lo for lo, hi in zip(self.packet_sizes, self.packet_sizes[1:])):
            raise ValueError("packet_sizes must be strictly increasing")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if self.num_uavs < 2:
            raise ValueError("num_uavs must be at least 2")
        if self.num_pairs < 1:
            raise ValueError("num_pairs must be >= 1")


@dataclass(frozen=True)
class SweepRow:
    axis_value: float
    packet_size_bits: int
    mean_loss_percent: float
    std_loss_percent: float


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[SweepRow, ...]


def _replicate_seed(base_seed: int, r: int) -> int:
    return (base_seed + r) & MASK64


def _require_axis(spec: SweepSpec, axis: SweepAxis) -> None:
    if spec.axis is not axis:
        raise ValueError(f"spec axis is {spec.axis.value}, expected {axis.value}")


def _assemble(spec: SweepSpec, rows: list[SweepRow]) -> SweepResult:
    # Cells are independent; sorting makes assembly order-irrelevant.
    rows.sort(key=lambda row: (row.axis_value, row.packet_size_bits))
    return SweepResult(spec, tuple(rows))


def _cell(topologies: list[Topology], radio: RadioParams, size: int) -> tuple[float, float]:
    losses = [mean_pair_loss_percent(t, radio, size) for t in topologies]
    return float(np.mean(losses)), float(np.std(losses))


def _shared_topologies(spec: SweepSpec) -> list[Topology]:
    return [
        generate_topology(_replicate_seed(spec.base_seed, r), spec.num_uavs, spec.area, spec.num_pairs)
        for r in range(spec.replicates)
    ]


def run_packet_power_sweep(spec: SweepSpec) -> SweepResult:
    """Loss vs packet size for each transmit power, on shared replicate topologies."""
    _require_axis(spec, SweepAxis.POWER_DBM)
    topologies = _shared_topologies(spec)
    rows = []
    for power in spec.axis_values:
        radio = replace(spec.radio, tx_power_dbm=power)
        for size in spec.packet_sizes:
            mean, std = _cell(topologies, radio, size)
            rows.append(SweepRow(power, size, mean, std))
    return _assemble(spec, rows)


def run_frequency_sweep(spec: SweepSpec) -> SweepResult:
    """Loss vs packet size for each carrier frequency, at fixed power."""
    _require_axis(spec, SweepAxis.FREQUENCY_HZ)
    topologies = _shared_topologies(spec)
    rows = []
    for frequency in spec.axis_values:
        radio = replace(spec.radio, frequency_hz=frequency)
        for size in spec.packet_sizes:
            mean, std = _cell(topologies, radio, size)
            rows.append(SweepRow(frequency, size, mean, std))
    return _assemble(spec, rows)


def run_area_sweep(spec: SweepSpec) -> SweepResult:
    """Loss vs packet size for square flight areas of different side lengths."""
    _require_axis(spec, SweepAxis.AREA_SIDE_M)
    rows = []
    for side in spec.axis_values:
        area = AreaSpec(side, side)
        topologies = [
            generate_topology(_replicate_seed(spec.base_seed, r), spec.num_uavs, area, spec.num_pairs)
            for r in range(spec.replicates)
        ]
        for size in spec.packet_sizes:
            mean, std = _cell(topologies, spec.radio, size)
            rows.append(SweepRow(side, size, mean, std))
    return _assemble(spec, rows)


def run_count_sweep(spec: SweepSpec) -> SweepResult:
    """Loss vs packet size for different swarm sizes in a fixed area.

    Under a pure free-space model the count only changes sampling
    variability, so no monotonic trend is asserted or implied.
    """
    _require_axis(spec, SweepAxis.UAV_COUNT)
    rows = []
    for value in spec.axis_values:
        count = int(value)
        if count != value or count < 2:
            raise ValueError(f"UAV count axis values must be integers >= 2, got {value}")
        if spec.num_pairs > count * (count - 1):
            raise ValueError(
                f"num_pairs={spec.num_pairs} infeasible for {count} UAVs "
                f"({count * (count - 1)} ordered pairs available)"
            )
        topologies = [
            generate_topology(_replicate_seed(spec.base_seed, r), count, spec.area, spec.num_pairs)
            for r in range(spec.replicates)
        ]
        for size in spec.packet_sizes:
            mean, std = _cell(topologies, spec.radio, size)
            rows.append(SweepRow(float(count), size, mean, std))
    return _assemble(spec, rows)


@dataclass(frozen=True)
class PowerRatioCell:
    packet_size_bits: int
    loss_ratio: float | None  # None when the high-power loss is zero


@dataclass(frozen=True)
class PowerRatioPair:
    power_low_dbm: float
    power_high_dbm: float
    nominal_power_ratio: float  # power_high / power_low
    cells: tuple[PowerRatioCell, ...]
    mean_loss_ratio: float | None


def power_ratio_report(result: SweepResult) -> tuple[PowerRatioPair, ...]:
    """loss(p_low)/loss(p_high) per packet size for every power pairing.

    Cells where the high-power loss is exactly zero are reported as absent
    rather than infinite; the per-pairing mean skips them.
    """
    _require_axis(result.spec, SweepAxis.POWER_DBM)
    powers = result.spec.axis_values
    if len(powers) < 2:
        raise ValueError("power ratio report needs at least 2 powers")
    loss = {(row.axis_value, row.packet_size_bits): row.mean_loss_percent for row in result.rows}

    pairs = []
    for low, high in combinations(powers, 2):
        cells = []
        ratios = []
        for size in result.spec.packet_sizes:
            loss_high = loss[(high, size)]
            if loss_high == 0.0:
                cells.append(PowerRatioCell(size, None))
                continue
            ratio = loss[(low, size)] / loss_high
            cells.append(PowerRatioCell(size, ratio))
            ratios.append(ratio)
        mean_ratio = float(np.mean(ratios)) if ratios else None
        pairs.append(PowerRatioPair(low, high, high / low, tuple(cells), mean_ratio))
    return tuple(pairs)

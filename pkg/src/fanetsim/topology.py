"""UAV constellation generation and geometry.

A topology is a static 2-D snapshot: node coordinates drawn uniformly in a
rectangle plus a set of directional source/destination pairs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from fanetsim.rng import SplitMix64


@dataclass(frozen=True)
class AreaSpec:
    """Rectangular flight area, in meters."""

    width_m: float
    height_m: float

    def __post_init__(self):
        if not (self.width_m > 0 and self.height_m > 0):
            raise ValueError("area dimensions must be positive")


@dataclass(frozen=True)
class Topology:
    """Immutable constellation snapshot: positions, directional pairs, and provenance."""

    positions: tuple[tuple[float, float], ...]
    pairs: tuple[tuple[int, int], ...]
    seed: int
    area: AreaSpec

    @property
    def num_uavs(self) -> int:
        return len(self.positions)


def generate_topology(seed: int, num_uavs: int, area: AreaSpec, num_pairs: int) -> Topology:
    """Generate node coordinates and communicating pairs from a single seed.

    Draw order is fixed (x before y, node 0 first) and the candidate pair
    list is the lexicographic ordering of all directional pairs (i, j),
    i != j, so the same seed regenerates the identical topology anywhere.
    """
    if num_uavs < 2:
        raise ValueError("num_uavs must be at least 2")
    max_pairs = num_uavs * (num_uavs - 1)
    if num_pairs < 0 or num_pairs > max_pairs:
        raise ValueError(f"num_pairs must be in [0, {max_pairs}] for {num_uavs} UAVs")

    rng = SplitMix64(seed)
    positions = []
    for _ in range(num_uavs):
        x = rng.next_uniform() * area.width_m
        y = rng.next_uniform() * area.height_m
        positions.append((x, y))

    all_pairs = [(i, j) for i in range(num_uavs) for j in range(num_uavs) if i != j]
    chosen = rng.sample_without_replacement(len(all_pairs), num_pairs)
    pairs = tuple(all_pairs[idx] for idx in chosen)
    return Topology(tuple(positions), pairs, seed, area)


def distance(topology: Topology, i: int, j: int) -> float:
    """Euclidean distance in meters between nodes i and j."""
    n = len(topology.positions)
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"UAV index out of range for {n} UAVs")
    xi, yi = topology.positions[i]
    xj, yj = topology.positions[j]
    dx = xi - xj
    dy = yi - yj
    return math.sqrt(dx * dx + dy * dy)


def serialize_topology(topology: Topology) -> str:
    """Round-trippable JSON document (full-precision coordinates)."""
    doc = {
        "seed": topology.seed,
        "area": {"width": topology.area.width_m, "height": topology.area.height_m},
        "positions": [[x, y] for x, y in topology.positions],
        "pairs": [[src, dst] for src, dst in topology.pairs],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_topology(text: str) -> Topology:
    doc = json.loads(text)
    area = AreaSpec(float(doc["area"]["width"]), float(doc["area"]["height"]))
    positions = tuple((float(x), float(y)) for x, y in doc["positions"])
    pairs = tuple((int(src), int(dst)) for src, dst in doc["pairs"])
    return Topology(positions, pairs, int(doc["seed"]), area)

from pathlib import Path

import pytest

from fanetsim import AreaSpec, generate_topology

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def seed42_topology():
    return generate_topology(42, 20, AreaSpec(1500.0, 1500.0), 10)

"""Shared fixtures: the shipped data files and a seeded random source."""

import random
from typing import List

import pytest

from pseudoline_workbench.arrangement.formats import LoadedInput
from pseudoline_workbench.arrangement.models import WiringDiagram
from pseudoline_workbench.arrangement.wiring import random_wiring
from pseudoline_workbench.common.fixtures import get_data_file_path, load_fixture


@pytest.fixture
def fixture_path():
    """Path of a shipped data file as a string."""
    return lambda name: str(get_data_file_path(name))


@pytest.fixture
def a13_2() -> LoadedInput:
    return load_fixture("a13_2.lines")


@pytest.fixture
def a6_1_wiring() -> WiringDiagram:
    loaded = load_fixture("a6_1.wd")
    assert loaded.wiring is not None
    return loaded.wiring


@pytest.fixture
def near_pencil_wiring() -> WiringDiagram:
    loaded = load_fixture("near_pencil_5.wd")
    assert loaded.wiring is not None
    return loaded.wiring


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def random_wirings(rng) -> List[WiringDiagram]:
    """A fixed sample of random valid wirings with 3 to 9 wires."""
    return [random_wiring(rng.randint(3, 9), rng) for _ in range(200)]

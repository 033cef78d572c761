"""
Shared fixtures: small named graphs and settings overrides
"""

import pytest

from libs.generators import canonical
from libs.graphs import Graph, from_edge_list


@pytest.fixture
def k3() -> Graph:
    return canonical("complete", 3)


@pytest.fixture
def p5() -> Graph:
    return canonical("path", 5)


@pytest.fixture
def c5() -> Graph:
    return canonical("cycle", 5)


@pytest.fixture
def grid3() -> Graph:
    return canonical("grid", 3, 3)


@pytest.fixture
def bowtie() -> Graph:
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def diamond() -> Graph:
    """K_4 minus the edge {0, 3}"""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def fan6() -> Graph:
    """Maximal outerplanar fan: P_5 plus an apex"""
    return canonical("fan", 5)


@pytest.fixture
def configure(monkeypatch):
    """Set FORCING_LAB_* variables for one test and refresh the cached settings"""
    from libs.core.config import get_settings

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"FORCING_LAB_{key.upper()}", str(value))
        get_settings.cache_clear()

    yield apply
    monkeypatch.undo()
    get_settings.cache_clear()

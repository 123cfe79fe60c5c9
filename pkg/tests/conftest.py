import math

import numpy as np
import pytest

from boltzmann_smoothing import config
from boltzmann_smoothing.collision import CollisionWorkspace, make_workspace
from boltzmann_smoothing.grid import Distribution, VelocityGrid, make_grid
from boltzmann_smoothing.kernel import CrossSection, make_cross_section


@pytest.fixture(autouse=True)
def _restore_process_config(monkeypatch: pytest.MonkeyPatch) -> None:
    # run_cli switches the determinism flag for the whole process
    monkeypatch.setattr(config, "DETERMINISTIC", True)
    monkeypatch.setattr(config, "DEBUG", False)


@pytest.fixture
def grid() -> VelocityGrid:
    return make_grid(8, 4.0)


@pytest.fixture
def fine_grid() -> VelocityGrid:
    return make_grid(16, 8.0)


def coarse_cross_section(gamma: float = 0.0, s: float = 0.5) -> CrossSection:
    """A few sigma nodes only; enough for structural checks of the operator."""
    return make_cross_section(
        gamma, s, theta_min=0.05, theta_panels=2, nodes_per_panel=2, azimuth_nodes=4
    )


@pytest.fixture
def xs() -> CrossSection:
    return coarse_cross_section()


@pytest.fixture
def ws(grid: VelocityGrid, xs: CrossSection) -> CollisionWorkspace:
    return make_workspace(grid, xs)


def maxwellian(
    grid: VelocityGrid, temperature: float = 1.0, drift: tuple[float, float, float] = (0, 0, 0)
) -> Distribution:
    v = grid.velocities - np.asarray(drift, dtype=float).reshape(3, 1, 1, 1)
    values = (2.0 * math.pi * temperature) ** -1.5 * np.exp(
        -0.5 * np.sum(v**2, axis=0) / temperature
    )
    return Distribution(grid=grid, values=values, nonnegative=True, label="maxwellian")


@pytest.fixture
def gaussian(grid: VelocityGrid) -> Distribution:
    return maxwellian(grid, 0.8, (0.3, 0.0, -0.2))


SMALL_CONFIG = """
[run]
seed = 3

[grid]
n_points = 8
half_width = 4

[cross_section]
gamma = 0
s = 0.5
theta_min = 0.05
theta_panels = 2
nodes_per_panel = 2
azimuth_nodes = 4

[verify]
family_size = 4
sample_count = 32
"""


@pytest.fixture
def small_config_text() -> str:
    return SMALL_CONFIG

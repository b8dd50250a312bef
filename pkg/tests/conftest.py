import math

import numpy as np
import pytest
from hypothesis import strategies as st

from mqeraser.core import ExperimentConfig

# g*dt = pi/4: a = |b| = 1/sqrt(2)
QUARTER = ExperimentConfig.from_gT(math.pi, 4)
# the figure parameters, g*dt = pi/10
FIG = ExperimentConfig.from_gT(2 * math.pi, 20)


@pytest.fixture
def quarter():
    return QUARTER


@pytest.fixture
def fig_config():
    return FIG


@st.composite
def configs(draw, max_N=30):
    N = draw(st.integers(min_value=1, max_value=max_N))
    g_dt = draw(st.floats(min_value=1e-3, max_value=math.pi / 2 - 1e-3))
    g = draw(st.floats(min_value=0.1, max_value=10.0))
    return ExperimentConfig(g_coupling=g, total_time_T=g_dt * N / g, reservoir_size_N=N)


@st.composite
def configs_with_n(draw, max_N=30, min_n=0):
    cfg = draw(configs(max_N=max_N).filter(lambda c: c.reservoir_size_N >= min_n))
    n = draw(st.integers(min_value=min_n, max_value=cfg.reservoir_size_N))
    return cfg, n


def random_config(rng: np.random.Generator, min_N: int = 1, max_N: int = 30) -> ExperimentConfig:
    N = int(rng.integers(min_N, max_N + 1))
    g_dt = rng.uniform(1e-3, math.pi / 2 - 1e-3)
    g = rng.uniform(0.1, 10.0)
    return ExperimentConfig(g_coupling=g, total_time_T=g_dt * N / g, reservoir_size_N=N)


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SWEEP_SECONDS: list[float] = []


@pytest.fixture(scope="session")
def fig_sweep():
    # the full figure sweep is the slowest thing in the suite; compute it once
    import time

    from mqeraser.optimizer import sweep

    t0 = time.perf_counter()
    rows = sweep(FIG, range(FIG.reservoir_size_N + 1))
    SWEEP_SECONDS.append(time.perf_counter() - t0)
    return rows

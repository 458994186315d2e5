import numpy as np
import pytest

from phasebound import FockState, normalize

TWO_PI = 2.0 * np.pi


def random_states(count, seed, max_size=10, max_offset=6):
    """Seeded stream of normalized states with random support windows."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        size = int(rng.integers(1, max_size + 1))
        offset = int(rng.integers(0, max_offset + 1))
        z = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        out.append(normalize(FockState(z, offset=offset)))
    return out


@pytest.fixture(scope="session")
def state_pool():
    return random_states(100, seed=20240809)

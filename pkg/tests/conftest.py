import os

import numpy as np
import pytest

# Fixed default seed for reproducible runs; override with WIGNERQI_TEST_SEED.
DEFAULT_SEED = 20260811


def test_seed() -> int:
    return int(os.environ.get("WIGNERQI_TEST_SEED", DEFAULT_SEED))


@pytest.fixture
def rng():
    return np.random.default_rng(test_seed())

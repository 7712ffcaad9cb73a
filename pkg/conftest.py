""" pytest configuration: checkout on sys.path and seeded random sources """

import os
import sys
import random
import numpy as np
import pytest

sys.path.insert(0,os.path.dirname(os.path.abspath(__file__)))

SEED = 20261019

@pytest.fixture
def rng():
    return random.Random(SEED)

@pytest.fixture
def np_rng():
    return np.random.default_rng(SEED)

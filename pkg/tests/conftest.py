import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bergecycles.hypergraph import Hypergraph, complete_r_graph  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def k4():
    return complete_r_graph(4, 3)


@pytest.fixture
def k5():
    return complete_r_graph(5, 3)


@pytest.fixture
def single():
    return Hypergraph(3, 3, [(1, 2, 3)])

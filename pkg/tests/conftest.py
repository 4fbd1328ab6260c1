import random

import pytest

from chordcore.chordal import random_chordal
from chordcore.graph import Graph


def p(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


def chordal_samples(count: int, n_max: int, seed: int = 0):
    r = random.Random(seed)
    for i in range(count):
        G, T = random_chordal(r.randint(0, n_max), fill=r.random(), seed=seed * 100003 + i)
        yield G, T

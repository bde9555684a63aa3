import random
from fractions import Fraction

import pytest

from stratsys.quiver import Quiver, canonical_apq, kronecker
from stratsys.reps import Representation, make_rep

ENTRY_CHOICES = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
                 Fraction(-2), Fraction(1, 2)]


def random_representation(q: Quiver, rng: random.Random, max_dim: int = 3) -> Representation:
    dims = [rng.randint(0, max_dim) for _ in q.vertices]
    if not any(dims):
        dims[rng.randrange(len(dims))] = 1
    maps = {}
    for a in q.arrows:
        rows = dims[q.index(a.tgt)]
        cols = dims[q.index(a.src)]
        maps[a.label] = [[rng.choice(ENTRY_CHOICES) for _ in range(cols)]
                         for _ in range(rows)]
    return make_rep(q, dims, maps)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def kron2():
    return kronecker(2)


@pytest.fixture(scope="session")
def kron3():
    return kronecker(3)


@pytest.fixture(scope="session")
def apq23():
    return canonical_apq(2, 3)

import random

import pytest

from hodgegenus.polycore import GenusPolynomial


@pytest.fixture
def y():
    return GenusPolynomial.y()


@pytest.fixture
def rng():
    return random.Random(20240611)

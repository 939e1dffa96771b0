from fractions import Fraction

import pytest
from hypothesis import settings

from alpert.exact import SurdValue

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def surd(*terms):
    """Build a SurdValue from (coefficient, radicand) pairs."""
    return SurdValue({rad: Fraction(c) for c, rad in terms})


def surd_matrix(rows):
    return [[surd(*cell) for cell in row] for row in rows]


@pytest.fixture
def as_surd():
    return surd

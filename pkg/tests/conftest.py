from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings

from heronfrieze.geometry import make_polygon

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture
def square():
    """Square inscribed in the unit circle: sides x = 2, diagonals x = 4."""
    return make_polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def half():
    return Fraction(1, 2)

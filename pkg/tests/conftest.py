import numpy as np
import pytest

from ringcent import gallery
from ringcent.enumeration import cached_catalog


@pytest.fixture(scope="session")
def catalog():
    """Session-wide access to cached iso-class catalogs."""
    return cached_catalog


@pytest.fixture(scope="session")
def small_universe():
    """Representatives of every ring of order <= 8."""
    rings = []
    for n in range(1, 9):
        rings.extend(cached_catalog(n).representatives)
    return rings


@pytest.fixture(scope="session")
def gallery_rings():
    return gallery.default_gallery()


def assert_same_ring(a, b):
    assert np.array_equal(a.add, b.add)
    assert np.array_equal(a.mul, b.mul)

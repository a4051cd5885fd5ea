"""Session fixtures shared across the test modules."""

import pytest

from spincorr.oracle import SphereGrid


@pytest.fixture(scope="session")
def grid2000():
    """Default direction grid used by the numerical oracles."""
    return SphereGrid.fibonacci(2000)

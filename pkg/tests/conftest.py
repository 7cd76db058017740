import pytest
from hypothesis import settings

from hiercoop import derive

# property tests do real numeric work per example; wall-clock deadlines
# only make them flaky on loaded machines
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def unit_params():
    """R = Q = 1: beta1 = 2, c = 4, the grid most goldens are frozen on."""
    return derive(1.0, 1.0)

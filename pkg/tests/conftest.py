"""Shared fixtures: cached construction censuses so the grids enumerate once."""

import pytest

from arrangement_lab.verify import construction_census


@pytest.fixture(scope="session")
def cached_census():
    """census of a named construction; memoized across the whole session."""

    def _get(family, d=0, n=0, seed=None, bound=None):
        return construction_census(family, d, n, seed, bound)

    return _get

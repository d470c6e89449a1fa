"""Shared fixtures for catcode tests."""

import pytest

from cat_grape.catcode import LogicalBasis
from cat_grape.operators import HilbertDims


@pytest.fixture(scope="module")
def basis() -> LogicalBasis:
    return LogicalBasis(HilbertDims(n_osc=24, n_trans=2))

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from wordrep import Graph  # noqa: E402


@pytest.fixture
def path3():
    return Graph.path("123")


@pytest.fixture
def k2():
    return Graph.complete("12")


@pytest.fixture
def prism():
    """Triangular prism; its representation number is 3."""
    return Graph("123456", ["12", "23", "13", "45", "56", "46", "14", "25", "36"])

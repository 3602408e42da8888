import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from suturedpoly.linalg import Covector
from suturedpoly.polytope import convex_hull, translate, vertex_centroid

PYRAMID_POINTS = [(0, 1, 1), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 0)]


@pytest.fixture(scope="session")
def pyramid():
    return convex_hull([Covector(c) for c in PYRAMID_POINTS])


@pytest.fixture(scope="session")
def centered_pyramid(pyramid):
    return translate(pyramid, -vertex_centroid(pyramid))

import numpy as np
import pytest

from phasegain import geometry


def random_polygon(rng, max_points=12, scale=1.0):
    """Hull of a random point cloud; may be a point, segment, or polygon."""
    k = int(rng.integers(1, max_points + 1))
    pts = scale * (rng.standard_normal(k) + 1j * rng.standard_normal(k))
    return geometry.convex_hull(pts)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

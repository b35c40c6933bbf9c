import numpy as np
import pytest

from dfsbary import make_disk_grid, make_sphere_grid

SPHERE_KINDS = ["eq", "seq", "gl"]
DISK_KINDS = ["ch1", "ch2", "glr"]


def pole_constant(f, grid):
    """Make rows at poles/origin single-valued, as continuous data would be."""
    f = np.array(f)
    if hasattr(grid, "theta"):
        for j in (0, -1):
            if grid.theta[j] in (0.0, np.pi):
                f[j] = f[j, 0]
    elif grid.include_origin:
        f[-1] = f[-1, 0]
    return f


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=SPHERE_KINDS)
def sphere_kind(request):
    return request.param


@pytest.fixture(params=[(k, o) for k in DISK_KINDS for o in (True, False)],
                ids=lambda p: f"{p[0]}-{'origin' if p[1] else 'noorigin'}")
def disk_case(request):
    return request.param


def random_sphere(kind, m, n, rng):
    g = make_sphere_grid(kind, m, n)
    return g, pole_constant(rng.standard_normal(g.shape), g)


def random_disk(kind, origin, m, n, rng):
    g = make_disk_grid(kind, m, n, origin)
    return g, pole_constant(rng.standard_normal(g.shape), g)

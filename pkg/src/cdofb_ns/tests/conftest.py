# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Shared Test Fixtures
====================

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest

# Import | Local Modules
from cdofb_ns.bench import TGV2D_BOX
from cdofb_ns.mesh import build_cartesian, build_voronoi_polygonal_2d


# =============================================================================
# Fixtures
# =============================================================================

@pytest.fixture(scope="session")
def unit_square():
    return build_cartesian(2, 1)


@pytest.fixture(scope="session")
def square_2x2():
    return build_cartesian(2, 2)


@pytest.fixture(scope="session")
def square_4x4():
    return build_cartesian(2, 4)


@pytest.fixture(scope="session")
def cube_2x2x2():
    return build_cartesian(3, 2)


@pytest.fixture(scope="session")
def voronoi_mesh():
    return build_voronoi_polygonal_2d(36, jitter=0.3, rng_seed=7)


@pytest.fixture(scope="session")
def tgv_mesh_16():
    return build_cartesian(2, 16, box=TGV2D_BOX)


@pytest.fixture(params=["cartesian", "voronoi", "cube"], scope="session")
def any_mesh(request, square_4x4, voronoi_mesh, cube_2x2x2):
    return {
        "cartesian": square_4x4,
        "voronoi": voronoi_mesh,
        "cube": cube_2x2x2,
    }[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

"""
pytest configuration and fixtures for trisolid tests.
"""

import pytest

from trisolid.bundles import RankTwoBundle
from trisolid.classify import VerificationContext
from trisolid.intersection import (
    hirzebruch,
    projective_plane,
    quadric_surface,
    ruled_surface,
)


@pytest.fixture
def plane():
    """P^2 with hyperplane class h."""
    return projective_plane()


@pytest.fixture
def quadric():
    """P^1 x P^1."""
    return quadric_surface()


@pytest.fixture
def f1():
    """The Segre-Hirzebruch surface F_1."""
    return hirzebruch(1)


@pytest.fixture
def elliptic_scroll():
    """The elliptic ruled surface with e = -1."""
    return ruled_surface(1, -1)


@pytest.fixture
def obvious(plane):
    """O(1) + O(1) on P^2."""
    h = plane.generator("h")
    return RankTwoBundle.split(plane, h, h)


@pytest.fixture
def candidate(plane):
    """c1 = 4h, c2 = 13 on P^2."""
    return RankTwoBundle(plane, plane.divisor(4), 13, splitting_type=(2, 2))


@pytest.fixture
def ctx():
    """Default verification context."""
    return VerificationContext()

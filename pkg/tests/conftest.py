"""Shared fixtures: cached cochain schemes and hand-entered cochains."""

import pytest

from leibcoh.algebras import catalog
from leibcoh.cochains import CochainScheme
from leibcoh.scalars import ONE, Scalar

HALF = Scalar(1) / 2


@pytest.fixture(scope="session")
def diamond_adj():
    return CochainScheme(catalog("diamond_e"), "adjoint")


@pytest.fixture(scope="session")
def diamond_triv():
    return CochainScheme(catalog("diamond_e"), "trivial")


@pytest.fixture(scope="session")
def g54_adj():
    return CochainScheme(catalog("g54"), "adjoint")


@pytest.fixture(scope="session")
def g54_triv():
    return CochainScheme(catalog("g54"), "trivial")


def diamond_phi_basis(scheme):
    """The four 2-cocycles spanning the diamond's degree-2 classes.

    Values are maps (e_a, e_b) -> coefficient * e_k entered directly;
    phi3 and phi7 are antisymmetric, phi14 is symmetric, phi11 is mixed.
    """
    fi = scheme.flat_index
    phi3 = {
        fi(0, (0, 3)): ONE,
        fi(0, (3, 0)): -ONE,
        fi(2, (2, 3)): ONE,
        fi(2, (3, 2)): -ONE,
    }
    phi7 = {
        fi(3, (1, 2)): ONE,
        fi(3, (2, 1)): -ONE,
    }
    phi11 = {
        fi(0, (2, 1)): ONE,
        fi(0, (2, 2)): HALF,
        fi(0, (3, 0)): -ONE,
    }
    phi14 = {fi(0, (3, 3)): ONE}
    return {3: phi3, 7: phi7, 11: phi11, 14: phi14}


@pytest.fixture(scope="session")
def diamond_phis(diamond_adj):
    return diamond_phi_basis(diamond_adj)

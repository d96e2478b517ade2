"""Shared instances for the test suite.

Everything is session-scoped: the algebras are immutable after
construction and several tests sweep the same instances.
"""

import pytest

from hopfdeform.boson import bosonize
from hopfdeform.groups import dihedral, symmetric
from hopfdeform.nichols import TruncatedNichols
from hopfdeform.racks import (cocycle_chi, cocycle_minus_one,
                              conjugation_rack)
from hopfdeform.yd import module_M_I, rack_module


def transposition_rack(G):
    n = len(G.perms[0])
    return conjugation_rack(G, G.perms.index(tuple([2, 1] + list(range(3, n + 1)))))


def fourcycle_rack(G):
    return conjugation_rack(G, G.perms.index((2, 3, 4, 1)))


@pytest.fixture(scope="session")
def G12():
    return dihedral(12)


@pytest.fixture(scope="session")
def A16(G12):
    V = module_M_I(G12, [(1, 6)])
    return bosonize(TruncatedNichols(V, cap=3), "M(1,6)")


@pytest.fixture(scope="session")
def A23(G12):
    V = module_M_I(G12, [(2, 3)])
    return bosonize(TruncatedNichols(V, cap=3), "M(2,3)")


@pytest.fixture(scope="session")
def A_I2(G12):
    V = module_M_I(G12, [(2, 3), (2, 9)])
    return bosonize(TruncatedNichols(V, cap=5), "M((2,3),(2,9))")


@pytest.fixture(scope="session")
def A_IL(G12):
    V = module_M_I(G12, [(2, 3)], [3])
    return bosonize(TruncatedNichols(V, cap=5), "M((2,3);3)")


@pytest.fixture(scope="session")
def AS3():
    G = symmetric(3)
    V = rack_module(cocycle_minus_one(transposition_rack(G)))
    return bosonize(TruncatedNichols(V, cap=5), "S3 transpositions")


@pytest.fixture(scope="session")
def AQ4():
    G = symmetric(4)
    V = rack_module(cocycle_minus_one(transposition_rack(G)))
    return bosonize(TruncatedNichols(V, cap=2), "S4 transpositions")


@pytest.fixture(scope="session")
def AD4():
    G = symmetric(4)
    V = rack_module(cocycle_minus_one(fourcycle_rack(G)))
    return bosonize(TruncatedNichols(V, cap=2), "S4 four-cycles")


@pytest.fixture(scope="session")
def ACHI():
    G = symmetric(4)
    V = rack_module(cocycle_chi(transposition_rack(G)))
    return bosonize(TruncatedNichols(V, cap=2), "S4 transpositions, sign twist")

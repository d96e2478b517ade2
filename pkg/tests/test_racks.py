import pytest

from hopfdeform.groups import symmetric
from hopfdeform.racks import (RackCocycle, cocycle_chi, cocycle_minus_one,
                              conjugation_rack)
from conftest import fourcycle_rack, transposition_rack


def test_transposition_rack_s3():
    rk = transposition_rack(symmetric(3))
    assert rk.size == 3
    assert rk.labels() == ["(12)", "(13)", "(23)"]
    # x |> x = x and the action of (12) swaps (13), (23)
    for i in range(3):
        assert rk.rshift(i, i) == i
    assert rk.rshift(0, 1) == 2 and rk.rshift(0, 2) == 1


def test_fourcycle_rack_s4():
    rk = fourcycle_rack(symmetric(4))
    assert rk.size == 6
    assert sorted(rk.labels()) == sorted(
        ["(1234)", "(1243)", "(1324)", "(1342)", "(1423)", "(1432)"])


def test_minus_one_cocycle():
    co = cocycle_minus_one(transposition_rack(symmetric(4)))
    assert all(v == -1 for row in co.q for v in row)
    G = co.rack.group
    # the extension is the sign character
    assert co.chi(0, G.identity) == 1
    assert co.chi(0, G.perms.index((2, 3, 4, 1))) == -1


def test_chi_cocycle_table_orientation():
    rk = transposition_rack(symmetric(4))
    co = cocycle_chi(rk)
    i12 = rk.pos[rk.group.index("(12)")]
    i13 = rk.pos[rk.group.index("(13)")]
    # q[i][j] = chi_{x_j}(g_i): (13) sends 1 < 2 to 3 > 2, so q[(12)][(13)]
    # = +1 while q[(13)][(12)] = -1
    assert co.q[i12][i13] == 1
    assert co.q[i13][i12] == -1
    assert all(co.q[i][i] == -1 for i in range(rk.size))


def test_bad_cocycle_rejected():
    rk = transposition_rack(symmetric(3))
    q = [[-1] * 3 for _ in range(3)]
    q[0][1] = 1  # breaks the cocycle identity

    with pytest.raises(ValueError):
        RackCocycle(rk, q, lambda t, s: -1)

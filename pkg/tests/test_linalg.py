import random

from hopfdeform.linalg import nullspace, rank, rref, solve
from hopfdeform.scalars import CycScalar

M = 12
ONE = CycScalar.one(M)


def s(q):
    return CycScalar.from_rational(M, q)


def mat(*rows):
    return [{c: s(v) for c, v in enumerate(row) if v} for row in rows]


def test_rref_idempotent_pivots():
    rows = mat([1, 2, 3], [2, 4, 6], [0, 1, 1])
    pivot_rows, pivot_cols = rref(rows, 3)
    assert pivot_cols == [0, 1]
    for pr, pc in zip(pivot_rows, pivot_cols):
        assert pr[pc] == ONE
        for other in pivot_cols:
            if other != pc:
                assert other not in pr
    assert rank(rows, 3) == 2


def test_nullspace_members_are_killed():
    rows = mat([1, 2, 3], [0, 1, 1], [1, 3, 4])
    basis, free = nullspace(rows, 3, ONE)
    assert len(basis) == 1 and free == [2]
    v = basis[0]
    for row in rows:
        acc = CycScalar.zero(M)
        for c, coef in row.items():
            if c in v:
                acc = acc + coef * v[c]
        assert acc.is_zero()


def test_solve_consistent_and_inconsistent():
    rows = mat([2, 0], [0, 4])
    x = solve(rows, [s(1), s(2)], 2)
    assert x == {0: s("1/2"), 1: s("1/2")}
    rows = mat([1, 1], [2, 2])
    assert solve(rows, [s(1), s(3)], 2) is None


def test_random_kernel_dimension():
    rng = random.Random(7)
    n = 6
    # rank-2 matrix: outer products of two fixed rows
    base = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(2)]
    rows = []
    for _ in range(8):
        a, b = rng.randrange(-2, 3), rng.randrange(-2, 3)
        rows.append([a * x + b * y for x, y in zip(*base)])
    m = mat(*rows)
    r = rank(m, n)
    basis, _ = nullspace(m, n, ONE)
    assert r + len(basis) == n

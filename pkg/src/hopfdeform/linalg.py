"""Exact sparse linear algebra over Q(zeta_m).

Rows are dicts {column: CycScalar}.  Everything is deterministic: pivots
are chosen as the lexicographically earliest columns, so reduced bases do
not depend on row input order beyond ties broken by position.
"""


def rref(rows, ncols):
    """Reduced row echelon form.

    Returns (pivot_rows, pivot_cols): pivot_rows[i] is a dict with
    pivot_rows[i][pivot_cols[i]] == 1 and zero entries at all other pivots.
    """
    pivot_rows = []
    pivot_cols = []
    for row in rows:
        r = dict(row)
        _reduce_against(r, pivot_rows, pivot_cols)
        if not r:
            continue
        piv = min(r)
        inv = r[piv].inv()
        r = {c: v * inv for c, v in r.items()}
        # eliminate the new pivot from existing rows
        for i, pr in enumerate(pivot_rows):
            coef = pr.get(piv)
            if coef is not None:
                _axpy(pr, -coef, r)
        # keep pivot lists sorted by column
        pos = 0
        while pos < len(pivot_cols) and pivot_cols[pos] < piv:
            pos += 1
        pivot_rows.insert(pos, r)
        pivot_cols.insert(pos, piv)
    return pivot_rows, pivot_cols


def _reduce_against(r, pivot_rows, pivot_cols):
    for pr, pc in zip(pivot_rows, pivot_cols):
        coef = r.get(pc)
        if coef is not None:
            _axpy(r, -coef, pr)


def _axpy(target, coef, row):
    """target += coef * row, dropping zeros."""
    for c, v in row.items():
        cur = target.get(c)
        nv = coef * v if cur is None else cur + coef * v
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


def nullspace(rows, ncols, one):
    """Basis of {v : M v = 0} for the matrix with the given rows.

    `one` is the scalar 1 of the coefficient field.  Returns
    (basis, free_cols): basis[j] is a dict over columns with
    basis[j][free_cols[j]] == one and remaining support on pivot columns.
    """
    pivot_rows, pivot_cols = rref(rows, ncols)
    pivset = set(pivot_cols)
    basis = []
    free_cols = [c for c in range(ncols) if c not in pivset]
    for f in free_cols:
        v = {f: one}
        for pr, pc in zip(pivot_rows, pivot_cols):
            coef = pr.get(f)
            if coef is not None:
                v[pc] = -coef
        basis.append(v)
    return basis, free_cols


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def reduce_mod(v, basis_by_freecol):
    """Reduce v modulo the span of nullspace vectors keyed by free column.

    basis_by_freecol: {free_col: vector-dict with vector[free_col] == 1}.
    Returns v minus kernel elements, supported away from the free columns.
    """
    out = dict(v)
    for c in list(out):
        nv = basis_by_freecol.get(c)
        if nv is not None:
            coef = out.get(c)
            if coef is not None and not coef.is_zero():
                _axpy(out, -coef, nv)
    out = {c: val for c, val in out.items() if not val.is_zero()}
    return out


def solve(rows, rhs, ncols):
    """One exact solution x of M x = rhs, or None if inconsistent.

    rows: list of row dicts; rhs: list of CycScalar (len == len(rows)).
    """
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if not b.is_zero():
            r[ncols] = b
        aug.append(r)
    pivot_rows, pivot_cols = rref(aug, ncols + 1)
    x = {}
    for pr, pc in zip(pivot_rows, pivot_cols):
        if pc == ncols:
            return None  # 0 = 1 row
        b = pr.get(ncols)
        if b is not None:
            x[pc] = b
    return x

"""Monomial Yetter-Drinfeld modules over group algebras.

Every module in scope has a basis permuted by the group action up to a
root-of-unity coefficient, and a coaction sending basis vectors to
group-likes.  We therefore store, per group element w:

    perm[w][i]   -- index of the basis vector w.x_i lands on,
    chiexp[w][i] -- e with w.x_i = omega^e x_{perm[w][i]},

where omega = zeta_conductor.  Both the representation property and the
Yetter-Drinfeld compatibility are validated exhaustively on construction.
"""

from .scalars import CycScalar, root_of_unity


class YDModule:
    def __init__(self, group, conductor, coact, perm, chiexp, labels, summands=None):
        self.group = group
        self.conductor = conductor
        self.dim = len(coact)
        self.coact = list(coact)
        self.perm = perm
        self.chiexp = chiexp
        self.labels = list(labels)
        self.summands = summands or [("module", None, 0, self.dim)]
        self._validate()

    def _validate(self):
        G, m = self.group, self.conductor
        n = self.dim
        for w in range(G.order):
            assert sorted(self.perm[w]) == list(range(n))
        e = G.identity
        assert all(self.perm[e][i] == i and self.chiexp[e][i] % m == 0 for i in range(n))
        for a in range(G.order):
            for b in range(G.order):
                ab = G.mul(a, b)
                for i in range(n):
                    j = self.perm[b][i]
                    assert self.perm[a][j] == self.perm[ab][i], "not a representation"
                    assert (self.chiexp[b][i] + self.chiexp[a][j]) % m == \
                        self.chiexp[ab][i] % m, "not a representation"
        for w in range(G.order):
            for i in range(n):
                # delta(w.x_i) = w g_i w^-1 (x) w.x_i
                assert self.coact[self.perm[w][i]] == G.conj(w, self.coact[i]), \
                    "Yetter-Drinfeld compatibility fails"

    # -- scalars --------------------------------------------------------

    def omega(self, e):
        return root_of_unity(self.conductor, e)

    def one(self):
        return CycScalar.one(self.conductor)

    def zero(self):
        return CycScalar.zero(self.conductor)

    # -- action / braiding -----------------------------------------------

    def act(self, w, i):
        """w . x_i as (target index, omega exponent)."""
        return self.perm[w][i], self.chiexp[w][i]

    def braid(self, i, j):
        """c(x_i (x) x_j) = omega^e x_k (x) x_l: returns ((k, l), e)."""
        g = self.coact[i]
        return (self.perm[g][j], i), self.chiexp[g][j]

    def braid_matrix_is_minus_flip(self):
        m = self.conductor
        half = m // 2
        if m % 2:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                (k, l), e = self.braid(i, j)
                if (k, l) != (j, i) or e % m != half:
                    return False
        return True

    def braid_squares_to_id(self):
        m = self.conductor
        for i in range(self.dim):
            for j in range(self.dim):
                (k, l), e = self.braid(i, j)
                (k2, l2), e2 = self.braid(k, l)
                if (k2, l2) != (i, j) or (e + e2) % m != 0:
                    return False
        return True

    def to_json(self):
        return {
            "group": self.group.name,
            "conductor": self.conductor,
            "labels": self.labels,
            "coaction": [self.group.labels[g] for g in self.coact],
            "action": [
                {"g": self.group.labels[w],
                 "perm": list(self.perm[w]),
                 "omega_exp": [e % self.conductor for e in self.chiexp[w]]}
                for w in range(self.group.order)
            ],
            "summands": [{"kind": k, "params": p, "offset": o, "size": s}
                         for k, p, o, s in self.summands],
        }


# -- dihedral modules ----------------------------------------------------


def module_M_ell(G, ell):
    """M_ell over D_m (m even): g swaps x1,x2; h.x1 = omega^ell x1;
    coaction sends both basis vectors to h^n, n = m/2."""
    m = G.m
    n = m // 2
    assert m % 2 == 0 and 1 <= ell < n and ell % 2 == 1
    coact = [n % m, n % m]  # h^n
    perm, chiexp = _dihedral_monomial(G, ell)
    labels = ["x1^(%d)" % ell, "x2^(%d)" % ell]
    return YDModule(G, m, coact, perm, chiexp, labels,
                    summands=[("M_ell", ell, 0, 2)])


def module_M_ik(G, i, k):
    """M_(i,k) over D_m: g swaps y1,y2; h.y1 = omega^k y1;
    delta(y1) = h^i, delta(y2) = h^(m-i)."""
    m = G.m
    assert 1 <= i < m and 1 <= k < m
    coact = [i % m, (m - i) % m]
    perm, chiexp = _dihedral_monomial(G, k)
    labels = ["y1^(%d,%d)" % (i, k), "y2^(%d,%d)" % (i, k)]
    return YDModule(G, m, coact, perm, chiexp, labels,
                    summands=[("M_ik", (i, k), 0, 2)])


def _dihedral_monomial(G, k):
    """perm/chiexp tables for the two-dimensional dihedral action with
    h acting as diag(omega^k, omega^-k) and g swapping the basis."""
    m = G.m
    perm, chiexp = [], []
    for w in range(G.order):
        a, b = divmod(w, m)  # w = g^a h^b
        perm.append((1, 0) if a else (0, 1))
        chiexp.append((b * k % m, (-b * k) % m))
    return perm, chiexp


# -- rack modules ---------------------------------------------------------


def rack_module(cocycle):
    """Principal YD realization of a rack with 2-cocycle over its group.

    Conductor 2 (so omega = -1 and all scalars are rational)."""
    rk = cocycle.rack
    G = rk.group
    perm, chiexp = [], []
    for w in range(G.order):
        p, e = [], []
        for i, x in enumerate(rk.elems):
            p.append(rk.pos[G.conj(w, x)])
            e.append(0 if cocycle.chi(i, w) == 1 else 1)
        perm.append(tuple(p))
        chiexp.append(tuple(e))
    labels = ["x_%s" % lab for lab in rk.labels()]
    M = YDModule(G, 2, rk.elems, perm, chiexp, labels,
                 summands=[("rack", cocycle.name, 0, rk.size)])
    # the induced braiding must be the rack braiding c^q
    for i in range(rk.size):
        for j in range(rk.size):
            (k, l), e = M.braid(i, j)
            assert l == i and k == rk.table[i][j]
            assert (1 if e % 2 == 0 else -1) == cocycle.q[i][j]
    M.rack = rk
    M.cocycle = cocycle
    return M


# -- direct sums and index data -------------------------------------------


def direct_sum(*mods):
    first = mods[0]
    for M in mods:
        assert M.group is first.group and M.conductor == first.conductor
    G = first.group
    coact, labels, summands = [], [], []
    perm = [[] for _ in range(G.order)]
    chiexp = [[] for _ in range(G.order)]
    off = 0
    for M in mods:
        coact.extend(M.coact)
        labels.extend(M.labels)
        for k, p, o, s in M.summands:
            summands.append((k, p, o + off, s))
        for w in range(G.order):
            perm[w].extend(j + off for j in M.perm[w])
            chiexp[w].extend(M.chiexp[w])
        off += M.dim
    perm = [tuple(p) for p in perm]
    chiexp = [tuple(e) for e in chiexp]
    return YDModule(G, first.conductor, coact, perm, chiexp, labels, summands)


def pairs_J(m):
    """All (i,k) with omega^(i*k) = -1, 1 <= i < m/2, 1 <= k < m."""
    n = m // 2
    return [(i, k) for i in range(1, n) for k in range(1, m)
            if (i * k) % m == n]


def valid_I(m, I):
    """I is a sequence in J with omega^(i_s k_t + i_t k_s) = 1 for s != t."""
    n = m // 2
    J = set(pairs_J(m))
    if not all(p in J for p in I):
        return False
    for s in range(len(I)):
        for t in range(len(I)):
            if s != t:
                (i1, k1), (i2, k2) = I[s], I[t]
                if (i1 * k2 + i2 * k1) % m != 0:
                    return False
    return True


def valid_IL(m, I, L):
    """(I, L) datum: I valid, every ell odd with 1 <= ell < n, every k in I
    odd, and omega^(i * ell) = -1 for all (i,k) in I, ell in L."""
    n = m // 2
    if not valid_I(m, I):
        return False
    if not all(1 <= ell < n and ell % 2 == 1 for ell in L):
        return False
    if not all(k % 2 == 1 for _, k in I):
        return False
    for i, _ in I:
        for ell in L:
            if (i * ell) % m != n:
                return False
    return True


def module_M_I(G, I, L=()):
    """The direct sum of M_(i,k) over I followed by M_ell over L."""
    mods = [module_M_ik(G, i, k) for i, k in I]
    mods += [module_M_ell(G, ell) for ell in L]
    return direct_sum(*mods)

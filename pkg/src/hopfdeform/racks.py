"""Conjugation racks on conjugacy classes and their 2-cocycles.

A rack here is always X = O (a conjugacy class) with x |> y = x y x^-1.
Cocycles q are tables q[i][j] scalar-valued such that the braiding
c(x_i (x) x_j) = q_ij x_{i|>j} (x) x_i satisfies the braid equation:

    q_{i, j|>k} q_{j, k} = q_{i|>j, i|>k} q_{i, k}.

Each cocycle carries a 1-cocycle extension chi_tau(s) defined for every
group element s (not just class members), needed for the principal
Yetter-Drinfeld realization: chi_tau(s t) = chi_tau(t) * chi_{t|>tau}(s).
"""

from .groups import perm_sign


class Rack:
    """Conjugation rack on a conjugacy class, elements sorted by label."""

    def __init__(self, group, class_elems):
        self.group = group
        # fixed enumeration: lexicographic in the group's labels
        self.elems = sorted(class_elems, key=lambda x: group.labels[x])
        self.size = len(self.elems)
        self.pos = {x: i for i, x in enumerate(self.elems)}
        self.table = [[self.pos[group.conj(self.elems[i], self.elems[j])]
                       for j in range(self.size)] for i in range(self.size)]
        self._check_rack_axioms()

    def _check_rack_axioms(self):
        t = self.table
        n = self.size
        for i in range(n):
            assert sorted(t[i]) == list(range(n)), "x |> . must be bijective"
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    # self-distributivity x|>(y|>z) = (x|>y)|>(x|>z)
                    assert t[i][t[j][k]] == t[t[i][j]][t[i][k]]

    def rshift(self, i, j):
        return self.table[i][j]

    def labels(self):
        return [self.group.labels[x] for x in self.elems]

    def to_json(self):
        return {"group": self.group.name, "elements": self.labels(),
                "table": self.table}


def conjugation_rack(group, rep):
    """Rack on the conjugacy class of the element with index `rep`."""
    return Rack(group, group.conjugacy_class(rep))


class RackCocycle:
    """A constant-on-nothing table q[i][j] plus its 1-cocycle extension.

    q[i][j] is the braiding coefficient of c(x_i (x) x_j); chi(tau_idx, s)
    evaluates the extension chi_tau(s) at an arbitrary group element s.
    values are plain ints (+1/-1) here; modules lift them to scalars.
    """

    def __init__(self, rack, q, chi, name=""):
        self.rack = rack
        self.q = q
        self._chi = chi
        self.name = name
        self._check_cocycle_identity()
        self._check_extension()

    def _check_cocycle_identity(self):
        t = self.rack.table
        q = self.q
        n = self.rack.size
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if q[i][t[j][k]] * q[j][k] != q[t[i][j]][t[i][k]] * q[i][k]:
                        raise ValueError("rack cocycle identity fails at (%d,%d,%d)" % (i, j, k))

    def _check_extension(self):
        """chi restricted to the class must give back q, and the 1-cocycle
        identity chi_tau(st) = chi_tau(t) chi_{t|>tau}(s) must hold for all
        group elements s, t (exhaustive)."""
        G = self.rack.group
        rk = self.rack
        for i, gi in enumerate(rk.elems):
            for j in range(rk.size):
                # braiding coefficient q_ij equals chi_{x_j}(g_i)
                if self._chi(j, gi) != self.q[i][j]:
                    raise ValueError("extension does not restrict to q at (%d,%d)" % (i, j))
        for tau in range(rk.size):
            gt = rk.elems[tau]
            for s in range(G.order):
                for t in range(G.order):
                    lhs = self._chi(tau, G.mul(s, t))
                    mov = rk.pos[G.conj(t, gt)]
                    if lhs != self._chi(tau, t) * self._chi(mov, s):
                        raise ValueError("1-cocycle identity fails")

    def chi(self, tau_idx, group_elt):
        return self._chi(tau_idx, group_elt)

    def to_json(self):
        return {"rack": self.rack.to_json(), "name": self.name,
                "q": self.q}


def cocycle_minus_one(rack):
    """The constant -1 cocycle, extended by the sign character."""
    n = rack.size
    G = rack.group
    q = [[-1] * n for _ in range(n)]

    def chi(tau_idx, s):
        return perm_sign(G.perms[s])

    return RackCocycle(rack, q, chi, name="-1")


def cocycle_chi(rack):
    """The cocycle chi on transpositions O_2^n.

    chi_tau(s) = 1 if tau = (a b) with a < b and s(a) < s(b), else -1;
    the braiding coefficient is q_ij = chi_{x_j}(g_i).
    """
    G = rack.group
    n = rack.size

    def transposition_points(x):
        p = G.perms[x]
        moved = [i + 1 for i in range(len(p)) if p[i] != i + 1]
        assert len(moved) == 2, "chi cocycle needs a class of transpositions"
        return moved[0], moved[1]

    points = [transposition_points(x) for x in rack.elems]

    def chi(tau_idx, s):
        a, b = points[tau_idx]
        p = G.perms[s]
        return 1 if p[a - 1] < p[b - 1] else -1

    q = [[chi(j, rack.elems[i]) for j in range(n)] for i in range(n)]
    return RackCocycle(rack, q, chi, name="chi")

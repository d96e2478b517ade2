"""Finite groups as explicit multiplication tables.

Elements are integer indices into a fixed enumeration; the full Cayley
table is stored (intended scale: order <= 720).  Dihedral groups carry a
(reflection, rotation) normal form and symmetric groups carry one-line
permutation tuples with composition (s*t)(x) = s(t(x)).
"""

from itertools import permutations


class FinGroup:
    def __init__(self, mult, labels, name=""):
        n = len(mult)
        assert all(len(row) == n for row in mult)
        self.order = n
        self.mult = mult
        self.labels = list(labels)
        self.name = name
        self.identity = self._find_identity()
        self.inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if mult[a][b] == self.identity:
                    self.inverse[a] = b
        assert all(i is not None for i in self.inverse), "not a group: missing inverses"
        self._check_associativity()

    def _find_identity(self):
        for e in range(self.order):
            if all(self.mult[e][a] == a and self.mult[a][e] == a for a in range(self.order)):
                return e
        raise ValueError("not a group: no identity")

    def _check_associativity(self):
        mult = self.mult
        for a in range(self.order):
            ra = mult[a]
            for b in range(self.order):
                ab = ra[b]
                mab = mult[ab]
                rb = mult[b]
                for c in range(self.order):
                    if mab[c] != ra[rb[c]]:
                        raise ValueError("not a group: associativity fails")

    def mul(self, a, b):
        return self.mult[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, g, x):
        """g x g^-1"""
        return self.mult[self.mult[g][x]][self.inverse[g]]

    def conjugacy_class(self, x):
        return sorted({self.conj(g, x) for g in range(self.order)})

    def conjugacy_classes(self):
        seen = set()
        out = []
        for x in range(self.order):
            if x not in seen:
                cls = self.conjugacy_class(x)
                seen.update(cls)
                out.append(cls)
        return out

    def centralizer(self, x):
        return [g for g in range(self.order)
                if self.mult[g][x] == self.mult[x][g]]

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mult[y][x]
            k += 1
        return k

    def power(self, x, k):
        out = self.identity
        if k < 0:
            x, k = self.inverse[x], -k
        for _ in range(k):
            out = self.mult[out][x]
        return out

    def index(self, label):
        return self.labels.index(label)

    def to_json(self):
        return {"order": self.order, "labels": self.labels, "mult": self.mult,
                "name": self.name}

    @classmethod
    def from_json(cls, data):
        return cls(data["mult"], data["labels"], data.get("name", ""))

    def __repr__(self):
        return "FinGroup(%s, order=%d)" % (self.name or "?", self.order)


def dihedral(m):
    """Dihedral group of order 2m: g^2 = 1 = h^m, g h g^-1 = h^-1.

    Element (a, b) <-> g^a h^b is indexed a*m + b, so indices 0..m-1 are
    the rotations h^b and m..2m-1 are the reflections g h^b.
    """
    assert m >= 1
    n = 2 * m

    def idx(a, b):
        return (a % 2) * m + (b % m)

    mult = [[0] * n for _ in range(n)]
    for a in range(2):
        for b in range(m):
            for c in range(2):
                for d in range(m):
                    # (g^a h^b)(g^c h^d) = g^(a+c) h^((-1)^c b + d)
                    bb = -b if c else b
                    mult[idx(a, b)][idx(c, d)] = idx(a + c, bb + d)
    labels = []
    for a in range(2):
        for b in range(m):
            if a == 0 and b == 0:
                labels.append("e")
            else:
                labels.append(("g" if a else "") + ("h^%d" % b if b > 1 else "h" * b))
    G = FinGroup(mult, labels, name="D_%d" % m)
    G.m = m
    return G


def dihedral_g(G):
    return G.m  # index of g = g^1 h^0


def dihedral_h(G, b=1):
    return b % G.m  # index of h^b


def cycle_label(perm):
    """Cycle-notation label for a one-line permutation tuple (1-based)."""
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or perm[i] == i + 1:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = perm[j] - 1
        parts.append("(" + "".join(str(x) for x in cyc) + ")")
    return "".join(parts) or "e"


def perm_sign(perm):
    inv = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def symmetric(n):
    """Symmetric group S_n, 2 <= n <= 6, with (s*t)(x) = s(t(x))."""
    assert 2 <= n <= 6
    elems = list(permutations(range(1, n + 1)))
    pos = {p: i for i, p in enumerate(elems)}
    mult = [[0] * len(elems) for _ in elems]
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            st = tuple(s[t[x] - 1] for x in range(n))
            mult[i][j] = pos[st]
    labels = [cycle_label(p) for p in elems]
    G = FinGroup(mult, labels, name="S_%d" % n)
    G.perms = elems
    G.n = n
    return G


def sign(G, i):
    """Sign of a symmetric-group element."""
    return perm_sign(G.perms[i])

"""Nichols algebras B(V) of monomial Yetter-Drinfeld modules, truncated
at a degree cap.

B(V) = T(V) / (+)_d ker Q_d with Q_d the quantum symmetrizer: the sum
over S_d of braid-group lifts of reduced words (Matsumoto section).  All
braidings in scope are monomial, so every braid lift is a (permutation,
root-of-unity) pair on the tensor basis and Q_d stays sparse.

Degree-d basis: pivot columns of the row-reduced Q_d; the quotient
projection subtracts nullspace vectors keyed by their free columns.
"""

from .linalg import nullspace, reduce_mod
from .scalars import CycScalar


class BudgetExceeded(Exception):
    pass


def _decode(t, n, d):
    word = []
    for _ in range(d):
        t, r = divmod(t, n)
        word.append(r)
    return tuple(reversed(word))


def _encode(word, n):
    t = 0
    for i in word:
        t = t * n + i
    return t


def braid_generator(V, d, pos):
    """The braid generator acting with c in slots (pos, pos+1) of V^(x)d,
    as a monomial operator (tgt, exp) on tensor indices."""
    n = V.dim
    N = n ** d
    tgt = [0] * N
    exp = [0] * N
    lo = n ** (d - pos - 2)  # weight of slot pos+1
    hi = lo * n              # weight of slot pos
    for t in range(N):
        a = (t // hi) % n
        b = (t // lo) % n
        (k, l), e = V.braid(a, b)
        tgt[t] = t + (k - a) * hi + (l - b) * lo
        exp[t] = e
    return tgt, exp


def _compose(f, g, m):
    """f after g, both monomial ops."""
    ftgt, fexp = f
    gtgt, gexp = g
    tgt = [ftgt[x] for x in gtgt]
    exp = [(ge + fexp[gt]) % m for gt, ge in zip(gtgt, gexp)]
    return tgt, exp


def reduced_word(perm, strategy="first"):
    """A reduced word in adjacent transpositions for a one-line permutation
    (0-based tuple).  'first' resolves the smallest descent at each step,
    'last' the largest; both have length = inversion count."""
    q = list(perm)
    word = []
    while True:
        descents = [i for i in range(len(q) - 1) if q[i] > q[i + 1]]
        if not descents:
            break
        i = descents[0] if strategy == "first" else descents[-1]
        q[i], q[i + 1] = q[i + 1], q[i]
        word.append(i)
    word.reverse()
    return word


def braid_lift(V, d, perm, gens, strategy="first"):
    """Monomial operator for the Matsumoto lift M(perm) on V^(x)d."""
    N = V.dim ** d
    op = (list(range(N)), [0] * N)
    for i in reduced_word(perm, strategy):
        op = _compose(op, gens[i], V.conductor)
    return op


def _all_perms(d):
    from itertools import permutations
    return list(permutations(range(d)))


def symmetrizer_rows(V, d, strategy="first", budget=None):
    """Rows of Q_d as sparse dicts over tensor-index columns."""
    n = V.dim
    N = n ** d
    if budget is not None and N > budget:
        raise BudgetExceeded("tensor dimension %d exceeds budget %d" % (N, budget))
    m = V.conductor
    gens = [braid_generator(V, d, p) for p in range(d - 1)]
    counts = {}
    for perm in _all_perms(d):
        tgt, exp = braid_lift(V, d, perm, gens, strategy)
        for c in range(N):
            key = (tgt[c], c)
            cnt = counts.get(key)
            if cnt is None:
                cnt = counts[key] = [0] * m
            cnt[exp[c] % m] += 1
    from .scalars import _ctx
    ctx = _ctx(m)
    deg = ctx.deg
    rows = [dict() for _ in range(N)]
    for (r, c), cnt in counts.items():
        coeffs = [0] * deg
        for e, k in enumerate(cnt):
            if k:
                pw = ctx.powers[e]
                for i in range(deg):
                    if pw[i]:
                        coeffs[i] += k * pw[i]
        s = CycScalar(m, coeffs)
        if not s.is_zero():
            rows[r][c] = s
    return rows


def matsumoto_agreement(V, d, budget=None):
    """Check that both reduced-word strategies lift every permutation of
    S_d to the same braid operator (hence give the same symmetrizer)."""
    N = V.dim ** d
    if budget is not None and N > budget:
        raise BudgetExceeded("tensor dimension %d exceeds budget %d" % (N, budget))
    m = V.conductor
    gens = [braid_generator(V, d, p) for p in range(d - 1)]
    for perm in _all_perms(d):
        a = braid_lift(V, d, perm, gens, "first")
        b = braid_lift(V, d, perm, gens, "last")
        if a[0] != b[0] or [e % m for e in a[1]] != [e % m for e in b[1]]:
            return False
    return True


class TruncatedNichols:
    """B(V) computed degree by degree up to `cap`.

    complete is True when some degree vanished (then top_degree is the
    last nonzero degree and the algebra is the whole of B(V))."""

    def __init__(self, V, cap, budget=200000):
        self.V = V
        self.cap = cap
        self.budget = budget
        n = V.dim
        one = V.one()
        self.basis_words = {0: [()], 1: [(i,) for i in range(n)]}
        self.pivot_pos = {0: {0: 0}, 1: {i: i for i in range(n)}}
        self.null_by_free = {0: {}, 1: {}}
        self.complete = False
        self.top_degree = None
        top = 1
        for d in range(2, cap + 1):
            rows = symmetrizer_rows(V, d, budget=self.budget)
            basis, free_cols = nullspace(rows, n ** d, one)
            self.null_by_free[d] = dict(zip(free_cols, basis))
            freeset = set(free_cols)
            pivots = [t for t in range(n ** d) if t not in freeset]
            self.basis_words[d] = [_decode(t, n, d) for t in pivots]
            self.pivot_pos[d] = {t: i for i, t in enumerate(pivots)}
            if not pivots:
                self.complete = True
                self.top_degree = top
                del self.basis_words[d]
                break
            top = d
        if not self.complete:
            self.top_degree = top  # truncation top, not proven top
        self.dims = [len(self.basis_words[d]) for d in sorted(self.basis_words)]
        self.offsets = {}
        off = 0
        for d in sorted(self.basis_words):
            self.offsets[d] = off
            off += len(self.basis_words[d])
        self.total_dim = off
        self._prod_cache = {}
        self._act_cache = {}
        self._delta_cache = {}

    # -- indexing -------------------------------------------------------

    def degrees(self):
        return sorted(self.basis_words)

    def index(self, d, pos):
        return self.offsets[d] + pos

    def split_index(self, idx):
        for d in reversed(self.degrees()):
            if idx >= self.offsets[d]:
                return d, idx - self.offsets[d]
        raise IndexError(idx)

    def word(self, d, pos):
        return self.basis_words[d][pos]

    def label(self, d, pos):
        if d == 0:
            return "1"
        return "*".join(self.V.labels[i] for i in self.word(d, pos))

    def hilbert_series(self):
        return list(self.dims)

    # -- structure maps ---------------------------------------------------

    def reduce_word_vec(self, d, vec):
        """Reduce {tensor_index: scalar} mod ker Q_d; returns {pos: scalar}."""
        if d not in self.basis_words:
            if self.complete and d > self.top_degree:
                return {}
            raise BudgetExceeded("degree %d beyond cap %d" % (d, self.cap))
        red = reduce_mod(vec, self.null_by_free[d])
        pp = self.pivot_pos[d]
        return {pp[t]: v for t, v in red.items()}

    def product(self, a, b):
        """Product of basis elements a=(d1,p1), b=(d2,p2) as {(d,pos): scalar}."""
        key = (a, b)
        out = self._prod_cache.get(key)
        if out is None:
            (d1, p1), (d2, p2) = a, b
            d = d1 + d2
            wa = self.basis_words[d1][p1]
            wb = self.basis_words[d2][p2]
            t = _encode(wa + wb, self.V.dim)
            red = self.reduce_word_vec(d, {t: self.V.one()})
            out = {(d, pos): v for pos, v in red.items()}
            self._prod_cache[key] = out
        return out

    def act(self, w, a):
        """Group element w acting on basis element a, as {(d,pos): scalar}."""
        key = (w, a)
        out = self._act_cache.get(key)
        if out is None:
            d, pos = a
            word = self.basis_words[d][pos]
            e = 0
            new = []
            for i in word:
                j, ei = self.V.act(w, i)
                new.append(j)
                e += ei
            t = _encode(tuple(new), self.V.dim)
            red = self.reduce_word_vec(d, {t: self.V.omega(e)})
            out = {(d, p): v for p, v in red.items()}
            self._act_cache[key] = out
        return out

    def coaction_degree(self, a):
        """Group element gamma with delta(b) = gamma (x) b for basis b."""
        d, pos = a
        G = self.V.group
        g = G.identity
        for i in self.basis_words[d][pos]:
            g = G.mul(g, self.V.coact[i])
        return g

    def counit(self, a):
        return self.V.one() if a == (0, 0) else self.V.zero()

    # -- braided coproduct -------------------------------------------------

    def _tensor_mult(self, A, B):
        """Multiply sparse elements of B (x) B (braided tensor algebra)."""
        out = {}
        for (a1, a2), va in A.items():
            g2 = self.coaction_degree(a2)
            for (b1, b2), vb in B.items():
                vab = va * vb
                for b1p, s1 in self.act(g2, b1).items():
                    left = self.product(a1, b1p)
                    right = self.product(a2, b2)
                    for l, vl in left.items():
                        for r, vr in right.items():
                            key = (l, r)
                            cur = out.get(key)
                            add = vab * s1 * vl * vr
                            nv = add if cur is None else cur + add
                            if nv.is_zero():
                                out.pop(key, None)
                            else:
                                out[key] = nv
        return out

    def delta(self, a):
        """Braided coproduct of a basis element, as {((d1,p1),(d2,p2)): v}."""
        out = self._delta_cache.get(a)
        if out is None:
            d, pos = a
            one = self.V.one()
            out = {((0, 0), (0, 0)): one}
            for i in self.basis_words[d][pos]:
                step = {((1, i), (0, 0)): one, ((0, 0), (1, i)): one}
                out = self._tensor_mult(out, step)
            self._delta_cache[a] = out
        return out

    def primitives_dimension(self, d):
        """dim of the space of primitives in degree d (0 expected for d>=2)."""
        nd = len(self.basis_words[d])
        # stack all middle components Delta_{a, d-a}, 0 < a < d
        rows = {}
        for pos in range(nd):
            for (l, r), v in self.delta((d, pos)).items():
                if l[0] == 0 or r[0] == 0:
                    continue
                rows.setdefault((l, r), {})[pos] = v
        basis, _ = nullspace(list(rows.values()), nd, self.V.one())
        return len(basis)

    def to_json(self):
        return {
            "module": self.V.to_json(),
            "cap": self.cap,
            "complete": self.complete,
            "top_degree": self.top_degree,
            "hilbert": self.dims,
            "basis": [[self.label(d, p) for p in range(len(self.basis_words[d]))]
                      for d in self.degrees()],
        }


def exterior_check(B):
    """Verify B(V) is an exterior algebra: braiding is -flip, dims are
    binomial, generators anticommute and square to zero."""
    V = B.V
    if not V.braid_matrix_is_minus_flip():
        return False
    if not B.complete:
        return False
    from math import comb
    n = V.dim
    if B.dims != [comb(n, d) for d in range(n + 1)]:
        return False
    for i in range(n):
        if B.product((1, i), (1, i)):
            return False
        for j in range(i + 1, n):
            anti = dict(B.product((1, i), (1, j)))
            for k, v in B.product((1, j), (1, i)).items():
                anti[k] = anti.get(k, V.zero()) + v
            if any(not v.is_zero() for v in anti.values()):
                return False
    return True

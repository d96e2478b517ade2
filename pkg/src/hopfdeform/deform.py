"""Cocycle deformations A_sigma of bosonizations and relation-verification
engines for the presented quadratic Hopf algebras.

The deformed product is m_sigma(a,b) = sigma(a1,b1) a2 b2 sigma^-1(a3,b3)
computed through the iterated coproduct; the deformed antipode is obtained
by the same triangular recursion as the undeformed one, now with respect
to m_sigma.  Theorem engines evaluate every defining relation of the
target presentation inside A_sigma and report exact pass/fail.
"""

from gmpy2 import mpq

from .cocycles import (check_eq1_eq2, check_invariance, exp_functional,
                       lift_functional, neg_functional)
from .nichols import BudgetExceeded
from .scalars import CycScalar
from .yd import valid_I, valid_IL


def _add_into(out, d, coef):
    for k, v in d.items():
        add = v * coef
        cur = out.get(k)
        nv = add if cur is None else cur + add
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv


class DeformedAlgebra:
    """A_sigma for sigma = e^(eta~), eta a bilinear functional on V."""

    def __init__(self, A, eta):
        self.A = A
        self.eta = eta
        lifted = lift_functional(A, eta)
        self.sigma = exp_functional(A, lifted)
        self.sigma_inv = exp_functional(A, neg_functional(lifted))
        self._delta2 = {}
        self._prod = {}
        self._antipode = {}

    def delta2(self, i):
        out = self._delta2.get(i)
        if out is None:
            out = []
            for a1, x, v in self.A.delta(i):
                for a2, a3, w in self.A.delta(x):
                    out.append((a1, a2, a3, v * w))
            self._delta2[i] = out
        return out

    def product(self, i, j):
        """m_sigma on basis elements, as {index: scalar}."""
        key = (i, j)
        out = self._prod.get(key)
        if out is None:
            A, sig, sinv = self.A, self.sigma, self.sigma_inv
            out = {}
            for a1, a2, a3, va in self.delta2(i):
                for b1, b2, b3, vb in self.delta2(j):
                    s = sig.get((a1, b1))
                    if s is None:
                        continue
                    t = sinv.get((a3, b3))
                    if t is None:
                        continue
                    coef = s * t * va * vb
                    _add_into(out, A.product(a2, b2), coef)
            self._prod[key] = out
        return out

    def mul_elts(self, x, y):
        out = {}
        for i, vi in x.items():
            for j, vj in y.items():
                _add_into(out, self.product(i, j), vi * vj)
        return out

    # -- antipode -----------------------------------------------------------

    def antipode(self, i):
        """S_sigma by triangular recursion: the only degree-0 right tensor
        leg of Delta(b#g) is (b#g) (x) (1#g), and m_sigma(x, 1#g) = x(1#g)
        since sigma is trivial when one argument is group-like."""
        out = self._antipode.get(i)
        if out is None:
            A = self.A
            d, g = A.split(i)
            if d[0] == 0:
                out = {A.grouplike_index(A.G.inv(g)): A.one()}
            else:
                acc = {}
                for a1, a2, v in A.delta(i):
                    if A.degree(a2) == 0:
                        continue
                    _add_into(acc, self.mul_elts(self.antipode(a1), {a2: A.one()}), v)
                ginv = A.grouplike_index(A.G.inv(g))
                out = {}
                for k, v in acc.items():
                    _add_into(out, self.product(k, ginv), -v)
            self._antipode[i] = out
        return out

    def check_antipode_axioms(self):
        """m_sigma(S_sigma (x) id)Delta = u eps = m_sigma(id (x) S_sigma)Delta,
        exhaustively on the basis."""
        A = self.A
        u = A.unit_index()
        for i in A.basis():
            left, right = {}, {}
            for a1, a2, v in A.delta(i):
                _add_into(left, self.mul_elts(self.antipode(a1), {a2: A.one()}), v)
                _add_into(right, self.mul_elts({a1: A.one()}, self.antipode(a2)), v)
            e = A.counit(i)
            want = {} if e.is_zero() else {u: e}
            if left != want or right != want:
                return False, A.label(i)
        return True, None

    # -- structural checks ---------------------------------------------------

    def check_closed_formula(self):
        """z1 ._sigma z2 = eta(x1,x2)(1 - h1 h2) + z1 z2 for z_i = x_i # e,
        over every pair of degree-1 module basis elements."""
        A = self.A
        G, V = A.G, A.V
        e = G.identity
        u = A.unit_index()
        for i in range(V.dim):
            z1 = A.index((1, i), e)
            h1 = V.coact[i]
            for j in range(V.dim):
                z2 = A.index((1, j), e)
                h2 = V.coact[j]
                want = dict(A.product(z1, z2))
                c = self.eta.get((i, j))
                if c is not None and not c.is_zero():
                    h12 = A.grouplike_index(G.mul(h1, h2))
                    _add_into(want, {u: A.one()}, c)
                    _add_into(want, {h12: A.one()}, -c)
                if self.product(z1, z2) != want:
                    return False, (A.label(z1), A.label(z2))
        return True, None

    def check_grouplikes_undeformed(self):
        A = self.A
        for g in range(A.G.order):
            ig = A.grouplike_index(g)
            for h in range(A.G.order):
                want = {A.grouplike_index(A.G.mul(g, h)): A.one()}
                if self.product(ig, A.grouplike_index(h)) != want:
                    return False
        return True

    def check_associativity(self):
        """(ab)c = a(bc) over all basis triples with total degree within
        the cap (products beyond the cap are undefined when truncated)."""
        A = self.A
        cap = None if A.complete else A.cap
        basis = A.basis()
        for a in basis:
            da = A.degree(a)
            for b in basis:
                dab = da + A.degree(b)
                if cap is not None and dab > cap:
                    continue
                ab = self.product(a, b)
                for c in basis:
                    if cap is not None and dab + A.degree(c) > cap:
                        continue
                    left = self.mul_elts(ab, {c: A.one()})
                    right = self.mul_elts({a: A.one()}, self.product(b, c))
                    if left != right:
                        return False, (A.label(a), A.label(b), A.label(c))
        return True, None


# -- relation evaluation helpers ---------------------------------------------


def _scalar(A, val):
    if isinstance(val, CycScalar):
        return val
    return CycScalar.from_rational(A.V.conductor, val)


def _one_minus_h(A, g, coef):
    """coef * (1 - 1#g) as an element dict."""
    coef = _scalar(A, coef)
    out = {}
    if not coef.is_zero():
        _add_into(out, {A.unit_index(): A.one()}, coef)
        _add_into(out, {A.grouplike_index(g): A.one()}, -coef)
    return out


def _relation(report, name, lhs, rhs, A):
    ok = lhs == rhs
    entry = {"name": name, "pass": ok}
    if not ok:
        entry["lhs"] = {A.label(k): str(v) for k, v in sorted(lhs.items())}
        entry["rhs"] = {A.label(k): str(v) for k, v in sorted(rhs.items())}
    report["relations"].append(entry)
    return ok


def _anticommutator(D, i, j):
    out = dict(D.product(i, j))
    _add_into(out, D.product(j, i), D.A.one())
    return out


# -- dihedral lifting data -----------------------------------------------


class DihedralLiftingData:
    """Coefficient families for the invariant functional on M_I or M_(I,L),
    indexed by summand positions.  Families are completed by the closed
    invariance conditions (alpha^{2,2}=alpha^{1,1}, alpha^{2,1}=alpha^{1,2},
    same for beta/zeta; xi^{r,r}=0, xi^{2,1}=xi^{1,2}) and entries whose
    Kronecker-delta condition fails are rejected."""

    def __init__(self, m, I, L=(), alpha11=None, alpha12=None,
                 beta11=None, beta12=None, zeta11=None, zeta12=None, xi12=None):
        self.m = m
        self.I = list(I)
        self.L = list(L)
        n = m // 2
        self.alpha11 = dict(alpha11 or {})
        self.alpha12 = dict(alpha12 or {})
        self.beta11 = dict(beta11 or {})
        self.beta12 = dict(beta12 or {})
        self.zeta11 = dict(zeta11 or {})
        self.zeta12 = dict(zeta12 or {})
        self.xi12 = dict(xi12 or {})
        for (u, t) in self.alpha11:
            q, k = I[u][1], I[t][1]
            if q % m != (m - k) % m:
                raise ValueError("alpha^{1,1}[%d,%d] must vanish (q != m-k)" % (u, t))
        for (u, t) in self.alpha12:
            q, k = I[u][1], I[t][1]
            if q % m != k % m:
                raise ValueError("alpha^{1,2}[%d,%d] must vanish (q != k)" % (u, t))
        for fam, named in ((self.beta11, "beta"), (self.zeta11, "zeta")):
            for (u, t) in fam:
                q, ell = I[u][1], L[t]
                if q % m != (m - ell) % m:
                    raise ValueError("%s^{1,1}[%d,%d] must vanish (q != m-ell)" % (named, u, t))
        for fam, named in ((self.beta12, "beta"), (self.zeta12, "zeta")):
            for (u, t) in fam:
                q, ell = I[u][1], L[t]
                if q % m != ell % m:
                    raise ValueError("%s^{1,2}[%d,%d] must vanish (q != ell)" % (named, u, t))
        for (u, t) in self.xi12:
            if L[u] != L[t]:
                raise ValueError("xi^{1,2}[%d,%d] must vanish (ell != ell')" % (u, t))
        _ = n

    def functional(self, V):
        """The invariant eta on V = M_I (+) M_L as {(i,j): CycScalar}."""
        def y(u, r):
            return 2 * u + (r - 1)

        def b(t, r):
            return 2 * len(self.I) + 2 * t + (r - 1)

        eta = {}

        def put(i, j, val):
            c = _scalar_m(self.m, val)
            if not c.is_zero():
                cur = eta.get((i, j))
                eta[(i, j)] = c if cur is None else cur + c

        for (u, t), v in self.alpha11.items():
            put(y(u, 1), y(t, 1), v)
            put(y(u, 2), y(t, 2), v)
        for (u, t), v in self.alpha12.items():
            put(y(u, 1), y(t, 2), v)
            put(y(u, 2), y(t, 1), v)
        for (u, t), v in self.beta11.items():
            put(y(u, 1), b(t, 1), v)
            put(y(u, 2), b(t, 2), v)
        for (u, t), v in self.beta12.items():
            put(y(u, 1), b(t, 2), v)
            put(y(u, 2), b(t, 1), v)
        for (u, t), v in self.zeta11.items():
            put(b(t, 1), y(u, 1), v)
            put(b(t, 2), y(u, 2), v)
        for (u, t), v in self.zeta12.items():
            put(b(t, 2), y(u, 1), v)
            put(b(t, 1), y(u, 2), v)
        for (u, t), v in self.xi12.items():
            put(b(u, 1), b(t, 2), v)
            put(b(u, 2), b(t, 1), v)
        assert check_invariance(V, eta), "closed conditions must imply invariance"
        return eta


def _scalar_m(m, val):
    if isinstance(val, CycScalar):
        return val
    return CycScalar.from_rational(m, val)


def free_parameters_AI(m, I):
    """The unconstrained coefficient slots of the invariant functional:
    ('alpha11', u, t) where q_u = m - k_t and ('alpha12', u, t) where
    q_u = k_t."""
    slots = []
    for u, (_, q) in enumerate(I):
        for t, (_, k) in enumerate(I):
            if q % m == (m - k) % m:
                slots.append(("alpha11", u, t))
    for u, (_, q) in enumerate(I):
        for t, (_, k) in enumerate(I):
            if q % m == k % m:
                slots.append(("alpha12", u, t))
    return slots


def free_parameters_BIL(m, I, L):
    slots = free_parameters_AI(m, I)
    for u, (_, q) in enumerate(I):
        for t, ell in enumerate(L):
            if q % m == (m - ell) % m:
                slots.append(("beta11", u, t))
                slots.append(("zeta11", u, t))
            if q % m == ell % m:
                slots.append(("beta12", u, t))
                slots.append(("zeta12", u, t))
    for u, lu in enumerate(L):
        for t, lt in enumerate(L):
            if lu == lt:
                slots.append(("xi12", u, t))
    return slots


def lifting_data_from_values(m, I, L, assignment):
    """Build DihedralLiftingData from {slot: value} over free parameter
    slots."""
    fams = {}
    for (fam, u, t), val in assignment.items():
        fams.setdefault(fam, {})[(u, t)] = val
    return DihedralLiftingData(m, I, L, **fams)


# -- theorem engines ------------------------------------------------------


def _dihedral_group_relations(report, D, A, m):
    G = A.G
    gl = A.grouplike_index
    from .groups import dihedral_g, dihedral_h
    g = dihedral_g(G)
    h = dihedral_h(G)
    one = {A.unit_index(): A.one()}
    _relation(report, "g^2 = 1", D.product(gl(g), gl(g)), one, A)
    hm = dict(one)
    cur = {gl(G.identity): A.one()}
    for _ in range(m):
        cur = D.mul_elts(cur, {gl(h): A.one()})
    _relation(report, "h^m = 1", cur, hm, A)
    ghg = D.mul_elts(D.product(gl(g), gl(h)), {gl(g): A.one()})
    _relation(report, "g h g = h^(m-1)", ghg,
              {gl(G.power(h, m - 1)): A.one()}, A)
    return g, h


def _dihedral_generator_relations(report, D, A, m, g, h, gens, labels, qexps):
    """g x_1 = x_2 g and h x_r = omega^{(+-)q} x_r h for each summand."""
    gl = A.grouplike_index
    V = A.V
    for (i1, i2), lab, q in zip(gens, labels, qexps):
        _relation(report, "g %s = %s g" % (lab[0], lab[1]),
                  D.product(gl(g), i1), D.product(i2, gl(g)), A)
        lhs = D.product(gl(h), i1)
        rhs = {k: v * V.omega(q) for k, v in D.product(i1, gl(h)).items()}
        _relation(report, "h %s = w^%d %s h" % (lab[0], q % m, lab[0]), lhs, rhs, A)
        lhs = D.product(gl(h), i2)
        rhs = {k: v * V.omega(-q) for k, v in D.product(i2, gl(h)).items()}
        _relation(report, "h %s = w^%d %s h" % (lab[1], (-q) % m, lab[1]), lhs, rhs, A)


def verify_theorem_AI(A, data):
    """All defining relations of the quadratic presentation A_I(lambda,gamma)
    hold in A_sigma, with lambda/gamma the sums of the alpha coefficients."""
    m = A.G.m
    I = data.I
    assert valid_I(m, I) and not data.L
    V = A.V
    eta = data.functional(V)
    D = DeformedAlgebra(A, eta)
    report = {"theorem": "dihedral-AI", "instance": {"m": m, "I": I},
              "parameters": {"alpha11": _str_fam(data.alpha11),
                             "alpha12": _str_fam(data.alpha12)},
              "relations": []}
    e = A.G.identity
    g, h = _dihedral_group_relations(report, D, A, m)

    def a(u, r):
        return A.index((1, 2 * u + (r - 1)), e)

    gens = [(a(u, 1), a(u, 2)) for u in range(len(I))]
    labels = [("a1^(%d,%d)" % pq, "a2^(%d,%d)" % pq) for pq in I]
    _dihedral_generator_relations(report, D, A, m, g, h, gens, labels,
                                  [q for _, q in I])

    lam, gam = {}, {}
    for u, (p, q) in enumerate(I):
        for t, (i, k) in enumerate(I):
            if q % m == (m - k) % m:
                lam[(u, t)] = _scalar_m(m, data.alpha11.get((u, t), 0)) + \
                    _scalar_m(m, data.alpha11.get((t, u), 0))
            if q % m == k % m:
                gam[(u, t)] = _scalar_m(m, data.alpha12.get((u, t), 0)) + \
                    _scalar_m(m, data.alpha12.get((t, u), 0))
    # the derived datum satisfies the symmetry constraints by construction
    for (u, t), v in lam.items():
        assert lam[(t, u)] == v
    for (u, t), v in gam.items():
        assert gam[(t, u)] == v

    for u, (p, q) in enumerate(I):
        for t, (i, k) in enumerate(I):
            lhs = _anticommutator(D, a(u, 1), a(t, 1))
            coef = lam.get((u, t), A.zero()) if q % m == (m - k) % m else A.zero()
            rhs = _one_minus_h(A, A.G.power(h, p + i), coef)
            _relation(report, "a1^(%d,%d) a1^(%d,%d) + sym = d_{q,m-k} lambda (1-h^%d)"
                      % (p, q, i, k, (p + i) % m), lhs, rhs, A)
            lhs = _anticommutator(D, a(u, 1), a(t, 2))
            coef = gam.get((u, t), A.zero()) if q % m == k % m else A.zero()
            rhs = _one_minus_h(A, A.G.power(h, p - i), coef)
            _relation(report, "a1^(%d,%d) a2^(%d,%d) + sym = d_{q,k} gamma (1-h^%d)"
                      % (p, q, i, k, (p - i) % m), lhs, rhs, A)
            # the a2-sector relation is the g-conjugate of the a1-sector one
            lhs = _anticommutator(D, a(u, 2), a(t, 2))
            coef = lam.get((u, t), A.zero()) if q % m == (m - k) % m else A.zero()
            rhs = _one_minus_h(A, A.G.power(h, -(p + i)), coef)
            _relation(report, "a2^(%d,%d) a2^(%d,%d) + sym = d_{q,m-k} lambda (1-h^%d)"
                      % (p, q, i, k, (-(p + i)) % m), lhs, rhs, A)

    ok, wit = D.check_closed_formula()
    report["relations"].append({"name": "degree-1 closed product formula",
                                "pass": ok, **({} if ok else {"witness": wit})})
    report["overall"] = all(r["pass"] for r in report["relations"])
    return report, D


def verify_theorem_BIL(A, data):
    """All defining relations of B_(I,L)(lambda,gamma,theta,mu) hold in
    A_sigma."""
    m = A.G.m
    I, L = data.I, data.L
    assert valid_IL(m, I, L)
    n = m // 2
    V = A.V
    eta = data.functional(V)
    D = DeformedAlgebra(A, eta)
    report = {"theorem": "dihedral-BIL",
              "instance": {"m": m, "I": I, "L": L},
              "parameters": {k: _str_fam(getattr(data, k))
                             for k in ("alpha11", "alpha12", "beta11", "beta12",
                                       "zeta11", "zeta12", "xi12")},
              "relations": []}
    e = A.G.identity
    g, h = _dihedral_group_relations(report, D, A, m)

    def a(u, r):
        return A.index((1, 2 * u + (r - 1)), e)

    def b(t, r):
        return A.index((1, 2 * len(I) + 2 * t + (r - 1)), e)

    gens = [(a(u, 1), a(u, 2)) for u in range(len(I))] + \
           [(b(t, 1), b(t, 2)) for t in range(len(L))]
    labels = [("a1^(%d,%d)" % pq, "a2^(%d,%d)" % pq) for pq in I] + \
             [("b1^(%d)" % ell, "b2^(%d)" % ell) for ell in L]
    _dihedral_generator_relations(report, D, A, m, g, h, gens, labels,
                                  [q for _, q in I] + list(L))

    zero = {}
    for u, (p, q) in enumerate(I):
        _relation(report, "[a1^(%d,%d)]^2 = 0" % (p, q),
                  D.product(a(u, 1), a(u, 1)), zero, A)
        _relation(report, "[a2^(%d,%d)]^2 = 0" % (p, q),
                  D.product(a(u, 2), a(u, 2)), zero, A)
        for t, (i, k) in enumerate(I):
            lam = _scalar_m(m, data.alpha11.get((u, t), 0)) + \
                _scalar_m(m, data.alpha11.get((t, u), 0))
            coef = lam if q % m == (m - k) % m else A.zero()
            _relation(report, "a1^(%d,%d) a1^(%d,%d) + sym" % (p, q, i, k),
                      _anticommutator(D, a(u, 1), a(t, 1)),
                      _one_minus_h(A, A.G.power(h, p + i), coef), A)
            gamv = _scalar_m(m, data.alpha12.get((u, t), 0)) + \
                _scalar_m(m, data.alpha12.get((t, u), 0))
            coef = gamv if q % m == k % m else A.zero()
            _relation(report, "a1^(%d,%d) a2^(%d,%d) + sym" % (p, q, i, k),
                      _anticommutator(D, a(u, 1), a(t, 2)),
                      _one_minus_h(A, A.G.power(h, p - i), coef), A)
    for u, lu in enumerate(L):
        for t, lt in enumerate(L):
            for r in (1, 2):
                for s in (1, 2):
                    if (u, r) > (t, s):
                        continue
                    _relation(report, "b%d^(%d) b%d^(%d) + sym = 0" % (r, lu, s, lt),
                              _anticommutator(D, b(u, r), b(t, s)), zero, A)
    for u, (p, q) in enumerate(I):
        for t, ell in enumerate(L):
            theta = _scalar_m(m, data.beta11.get((u, t), 0)) + \
                _scalar_m(m, data.zeta11.get((u, t), 0))
            coef = theta if q % m == (m - ell) % m else A.zero()
            _relation(report, "a1^(%d,%d) b1^(%d) + sym = d_{q,m-l} theta (1-h^%d)"
                      % (p, q, ell, (n + p) % m),
                      _anticommutator(D, a(u, 1), b(t, 1)),
                      _one_minus_h(A, A.G.power(h, n + p), coef), A)
            mu = _scalar_m(m, data.beta12.get((u, t), 0)) + \
                _scalar_m(m, data.zeta12.get((u, t), 0))
            coef = mu if q % m == ell % m else A.zero()
            _relation(report, "a1^(%d,%d) b2^(%d) + sym = d_{q,l} mu (1-h^%d)"
                      % (p, q, ell, (n + p) % m),
                      _anticommutator(D, a(u, 1), b(t, 2)),
                      _one_minus_h(A, A.G.power(h, n + p), coef), A)

    ok, wit = D.check_closed_formula()
    report["relations"].append({"name": "degree-1 closed product formula",
                                "pass": ok, **({} if ok else {"witness": wit})})
    report["overall"] = all(r["pass"] for r in report["relations"])
    return report, D


def rack_constant_functional(V, lam_over_3):
    c = _scalar_m(2, lam_over_3)
    eta = {}
    if not c.is_zero():
        for i in range(V.dim):
            for j in range(V.dim):
                eta[(i, j)] = c
    return eta


def verify_theorem_Sn(A, lam, variant):
    """Theorem engine for the symmetric-group presentations.

    variant: 'Q3' (S_3, X = transpositions), 'Q4' (S_4, transpositions) or
    'D4' (S_4, 4-cycles).  eta = (lam/3) sum d_tau (x) d_mu; the derived
    parameters are Gamma = lam and Lambda = 2 lam / 3 (Q4) or lam / 3 (D4).
    """
    V = A.V
    rk = V.rack
    G = A.G
    lam = mpq(lam)
    eta = rack_constant_functional(V, lam / 3)
    assert check_invariance(V, eta)
    eq1, eq2, _ = check_eq1_eq2(V, eta)
    assert eq1 and eq2
    D = DeformedAlgebra(A, eta)
    report = {"theorem": "symmetric-" + variant,
              "instance": {"group": G.name, "rack": V.cocycle.name},
              "parameters": {"lambda": str(lam)},
              "relations": []}
    e = G.identity
    gl = A.grouplike_index

    def aa(x):
        """a_x for a rack element given by its group label."""
        return A.index((1, rk.pos[_by_label(G, x)]), e)

    def hh(x):
        return gl(_by_label(G, x))

    # group-likes multiply as in the group (h_r h_s = h_{rs}), all pairs
    report["relations"].append({"name": "h_r h_s = h_{rs} (all pairs)",
                                "pass": D.check_grouplikes_undeformed()})
    # h_j a_i = -a_{j>i} h_j for j in X (X generates S_n)
    ok = True
    for j in range(rk.size):
        hj = gl(rk.elems[j])
        for i in range(rk.size):
            lhs = D.product(hj, A.index((1, i), e))
            tgt = A.index((1, rk.table[j][i]), e)
            rhs = {k: -v for k, v in D.product(tgt, hj).items()}
            if lhs != rhs:
                ok = False
    report["relations"].append({"name": "h_j a_i = -a_{j>i} h_j, j in X", "pass": ok})

    Gamma = _scalar_m(2, lam)
    third = _scalar_m(2, lam / 3)
    if variant in ("Q3", "Q4"):
        _relation(report, "a_(12)^2 = 0", D.product(aa("(12)"), aa("(12)")), {}, A)
        # a^2 = 0 for every transposition (conjugate instances)
        ok = all(D.product(A.index((1, i), e), A.index((1, i), e)) == {}
                 for i in range(rk.size))
        report["relations"].append({"name": "a_tau^2 = 0, all tau", "pass": ok})
        lhs = D.mul_elts({aa("(12)"): A.one()}, {aa("(23)"): A.one()})
        _add_into(lhs, D.product(aa("(23)"), aa("(13)")), A.one())
        _add_into(lhs, D.product(aa("(13)"), aa("(12)")), A.one())
        rhs = _one_minus_h(A, G.mul(_by_label(G, "(12)"), _by_label(G, "(23)")), Gamma)
        _relation(report, "a_(12)a_(23)+a_(23)a_(13)+a_(13)a_(12) = Gamma(1-h_(12)h_(23))",
                  lhs, rhs, A)
        if variant == "Q4":
            Lam = third + third
            lhs = _anticommutator(D, aa("(12)"), aa("(34)"))
            rhs = _one_minus_h(A, G.mul(_by_label(G, "(12)"), _by_label(G, "(34)")), Lam)
            _relation(report, "a_(12)a_(34)+a_(34)a_(12) = Lambda(1-h_(12)h_(34))",
                      lhs, rhs, A)
            report["parameters"]["Lambda"] = str(2 * lam / 3)
        report["parameters"]["Gamma"] = str(lam)
    else:
        assert variant == "D4"
        Lam = third
        lhs = D.product(aa("(1234)"), aa("(1234)"))
        rhs = _one_minus_h(A, _by_label(G, "(13)(24)"), Lam)
        _relation(report, "a_(1234)^2 = Lambda(1-h_(13)(24))", lhs, rhs, A)
        # conjugate instances: a_tau^2 = Lambda(1 - h_{tau^2}) for all tau
        ok = True
        for i in range(rk.size):
            tau = rk.elems[i]
            want = _one_minus_h(A, G.mul(tau, tau), Lam)
            if D.product(A.index((1, i), e), A.index((1, i), e)) != want:
                ok = False
        report["relations"].append({"name": "a_tau^2 = Lambda(1-h_{tau^2}), all tau",
                                    "pass": ok})
        lhs = _anticommutator(D, aa("(1234)"), aa("(1432)"))
        _relation(report, "a_(1234)a_(1432)+a_(1432)a_(1234) = 0", lhs, {}, A)
        lhs = dict(D.product(aa("(1234)"), aa("(1243)")))
        _add_into(lhs, D.product(aa("(1243)"), aa("(1423)")), A.one())
        _add_into(lhs, D.product(aa("(1423)"), aa("(1234)")), A.one())
        rhs = _one_minus_h(A, G.mul(_by_label(G, "(12)"), _by_label(G, "(13)")), Gamma)
        _relation(report, "a_(1234)a_(1243)+a_(1243)a_(1423)+a_(1423)a_(1234)"
                  " = Gamma(1-h_(12)h_(13))", lhs, rhs, A)
        report["parameters"]["Lambda"] = str(lam / 3)
        report["parameters"]["Gamma"] = str(lam)

    # Gamma-relation conjugated by each h_tau, tau in X
    ok = True
    reps = ("(12)", "(23)", "(13)") if variant in ("Q3", "Q4") else \
        ("(1234)", "(1243)", "(1423)")
    for j in range(rk.size):
        theta = rk.elems[j]
        idx = [rk.pos[G.conj(theta, _by_label(G, r))] for r in reps]
        lhs = dict(D.product(A.index((1, idx[0]), e), A.index((1, idx[1]), e)))
        _add_into(lhs, D.product(A.index((1, idx[1]), e), A.index((1, idx[2]), e)), A.one())
        _add_into(lhs, D.product(A.index((1, idx[2]), e), A.index((1, idx[0]), e)), A.one())
        gprod = G.mul(G.conj(theta, _by_label(G, reps[0])),
                      G.conj(theta, _by_label(G, reps[1])))
        if lhs != _one_minus_h(A, gprod, Gamma):
            ok = False
    report["relations"].append({"name": "Gamma-relation, conjugate instances",
                                "pass": ok})

    ok, wit = D.check_closed_formula()
    report["relations"].append({"name": "degree-1 closed product formula",
                                "pass": ok, **({} if ok else {"witness": wit})})
    # the statement's bracket pairs [(2lam,3lam)] / [(lam,3lam)] are the same
    # projective points as the affine values verified above
    report["projective_note"] = (
        "verified affine parameters (Lambda,Gamma); the bracketed pairs in the "
        "statement agree with them up to overall scaling")
    report["overall"] = all(r["pass"] for r in report["relations"])
    return report, D


def _by_label(G, lab):
    return G.labels.index(lab)


def _str_fam(fam):
    return {"%d,%d" % k: str(mpq(v)) for k, v in sorted(fam.items())}


def chi_triviality_scan(A, values=(0, 1, -1, 2, mpq(1, 2))):
    """Scan of invariant functionals on the chi-twisted transposition rack:
    grid over the invariant basis, filter by the braided-symmetry equations,
    and for each survivor verify the deformed quadratic relations coincide
    with the undeformed ones (trivial deformation)."""
    from itertools import product as iproduct

    from .cocycles import invariant_subspace
    V = A.V
    rk = V.rack
    G = A.G
    e = G.identity
    basis = invariant_subspace(V)
    report = {"theorem": "chi-triviality",
              "instance": {"group": G.name, "rack": V.cocycle.name},
              "invariant_dimension": len(basis),
              "grid_values": [str(mpq(v)) for v in values],
              "survivors": [], "overall": True}
    zero = V.zero()
    a12 = A.index((1, rk.pos[_by_label(G, "(12)")]), e)
    a34 = A.index((1, rk.pos[_by_label(G, "(34)")]), e)
    a23 = A.index((1, rk.pos[_by_label(G, "(23)")]), e)
    a13 = A.index((1, rk.pos[_by_label(G, "(13)")]), e)
    for coeffs in iproduct(values, repeat=len(basis)):
        eta = {}
        for c, b in zip(coeffs, basis):
            cs = _scalar_m(2, c)
            if cs.is_zero():
                continue
            for k, v in b.items():
                nv = eta.get(k, zero) + cs * v
                if nv.is_zero():
                    eta.pop(k, None)
                else:
                    eta[k] = nv
        eq1, eq2, _ = check_eq1_eq2(V, eta)
        if not (eq1 and eq2):
            continue
        D = DeformedAlgebra(A, eta)
        r1 = D.product(a12, a12) == A.product(a12, a12)
        comm = dict(D.product(a12, a34))
        _add_into(comm, D.product(a34, a12), -A.one())
        ucomm = dict(A.product(a12, a34))
        _add_into(ucomm, A.product(a34, a12), -A.one())
        r2 = comm == ucomm
        tri = dict(D.product(a12, a23))
        _add_into(tri, D.product(a23, a13), -A.one())
        _add_into(tri, D.product(a13, a12), -A.one())
        utri = dict(A.product(a12, a23))
        _add_into(utri, A.product(a23, a13), -A.one())
        _add_into(utri, A.product(a13, a12), -A.one())
        r3 = tri == utri
        trivial = r1 and r2 and r3
        report["survivors"].append({
            "coefficients": [str(mpq(c)) for c in coeffs],
            "deformed_relations_unchanged": trivial})
        if not trivial:
            report["overall"] = False
    return report

"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are represented in the power basis 1, zeta, ..., zeta^(phi(m)-1)
modulo the m-th cyclotomic polynomial, with gmpy2 rationals as coefficients.
Every operation is exact; there are no floats anywhere.
"""

from math import gcd

from gmpy2 import mpq

Rational = mpq


def rational(num, den=1):
    """Exact rational from ints or decimal strings."""
    return mpq(num, den) if den != 1 else mpq(num)


def cyclotomic_polynomial(m):
    """Coefficient list (low degree first, exact rationals) of Phi_m.

    Computed by exact division: Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [mpq(0)] * (m + 1)
    num[0], num[m] = mpq(-1), mpq(1)
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return num


def _poly_divexact(a, b):
    """Exact polynomial division a / b (remainder must vanish)."""
    a = list(a)
    out = [mpq(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert all(x == 0 for x in a[: len(b) - 1]), "non-exact polynomial division"
    return out


class _Context:
    """Per-conductor data: Phi_m and the reduction table for zeta^k."""

    def __init__(self, m):
        self.m = m
        self.phi = cyclotomic_polynomial(m)
        self.deg = len(self.phi) - 1
        # zeta^k in the power basis for 0 <= k <= max(2*deg - 2, m)
        pows = []
        cur = [mpq(0)] * self.deg
        cur[0] = mpq(1)
        for _ in range(max(2 * self.deg - 1, m + 1)):
            pows.append(tuple(cur))
            lead = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if lead:
                # the shifted-out top term is lead * zeta^deg = -lead * phi[:deg]
                for i in range(self.deg):
                    cur[i] -= lead * self.phi[i]
        self.powers = pows


_contexts = {}


def _ctx(m):
    if m not in _contexts:
        _contexts[m] = _Context(m)
    return _contexts[m]


class CycScalar:
    """An element of Q(zeta_m), immutable and hashable."""

    __slots__ = ("m", "c", "_hash")

    def __init__(self, m, coeffs):
        ctx = _ctx(m)
        c = tuple(mpq(x) for x in coeffs)
        assert len(c) == ctx.deg
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("CycScalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, m, q):
        ctx = _ctx(m)
        coeffs = [mpq(q)] + [mpq(0)] * (ctx.deg - 1)
        return cls(m, coeffs)

    @classmethod
    def zero(cls, m):
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return all(x == 0 for x in self.c)

    def is_rational(self):
        return all(x == 0 for x in self.c[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.c[0]

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.m != self.m:
                raise ValueError("mixed conductors %d and %d" % (self.m, other.m))
            return other
        if isinstance(other, (int, type(mpq(0)))):
            return CycScalar.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.m, [a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.m, [-a for a in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycScalar(self.m, [a - b for a, b in zip(self.c, other.c)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = _ctx(self.m)
        d = ctx.deg
        a, b = self.c, other.c
        raw = [mpq(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        raw[i + j] += ai * bj
        out = [mpq(0)] * d
        for k, rk in enumerate(raw):
            if rk:
                pw = ctx.powers[k]
                for i in range(d):
                    if pw[i]:
                        out[i] += rk * pw[i]
        return CycScalar(self.m, out)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse by extended Euclid against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        ctx = _ctx(self.m)
        # work with polynomial coefficient lists (low first)
        r0, r1 = list(ctx.phi), _trim(list(self.c))
        s0, s1 = [], [mpq(1)]
        while True:
            if len(r1) == 1:
                inv_lead = 1 / r1[0]
                coeffs = [x * inv_lead for x in s1]
                coeffs += [mpq(0)] * (ctx.deg - len(coeffs))
                return CycScalar(self.m, coeffs[: ctx.deg])
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, _trim(r), s

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycScalar.one(self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, type(mpq(0)))):
            other = CycScalar.from_rational(self.m, other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.m == other.m and self.c == other.c

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.m, self.c))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            elif i == 1:
                terms.append("%s*z" % a)
            else:
                terms.append("%s*z^%d" % (a, i))
        return "Cyc(%d; %s)" % (self.m, " + ".join(terms) or "0")

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {
            "m": self.m,
            "coeffs": [[str(x.numerator), str(x.denominator)] for x in self.c],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = [mpq(int(n), int(d)) for n, d in data["coeffs"]]
        return cls(data["m"], coeffs)


def root_of_unity(m, k=1):
    """zeta_m^k as a CycScalar."""
    ctx = _ctx(m)
    k %= m
    return CycScalar(m, ctx.powers[k]) if k < len(ctx.powers) else _slow_pow(m, k)


def _slow_pow(m, k):
    z = CycScalar(m, _ctx(m).powers[1])
    return z ** k


# -- bare polynomial helpers (coefficient lists, low degree first) -------


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [mpq(0)] * max(len(a) - len(b) + 1, 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    return q, a[: len(b) - 1] or [mpq(0)]


def _poly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1 or 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [mpq(0)] * (n - len(a))
    for i, bi in enumerate(b):
        a[i] -= bi
    return a


def euler_phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)

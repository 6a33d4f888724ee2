"""Exact real algebraic scalars with decidable sign.

Every coordinate in this package is a ``Scalar``: an element of a tower of
real fields built from Q(cos(pi/M)) (which contains cos and sin of every
rational multiple of pi with denominator dividing M) by adjoining square
roots of non-negative elements.  Arithmetic is exact field arithmetic on
polynomial representatives; ``sign`` is decided exactly, using a cheap
float-interval fast path and escalating to arbitrary-precision interval
arithmetic only when needed.  There is no epsilon anywhere.

Equality is ``sign(a - b) == 0``.  Decimal printing truncates, never rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import sympy


class ScalarError(ValueError):
    pass


class ScalarParseError(ScalarError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


# ---------------------------------------------------------------------------
# float interval helpers (outward-rounded, sound)

_INF = math.inf


def _up(x):
    return math.nextafter(x, _INF) if math.isfinite(x) else x


def _dn(x):
    return math.nextafter(x, -_INF) if math.isfinite(x) else x


def _iadd(a, b):
    return (_dn(a[0] + b[0]), _up(a[1] + b[1]))


def _imul(a, b):
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (_dn(min(p)), _up(max(p)))


def _isub(a, b):
    return (_dn(a[0] - b[1]), _up(a[1] - b[0]))


def _ifrac(c):
    # float(Fraction) is correctly rounded; widen by one ulp each side
    try:
        f = float(c)
    except OverflowError:
        return (-_INF, _INF)
    if math.isnan(f):
        return (-_INF, _INF)
    return (_dn(f), _up(f))


def _isqrt_iv(a):
    lo = max(a[0], 0.0)
    return (_dn(math.sqrt(lo)), _up(math.sqrt(a[1])) if a[1] >= 0 else 0.0)


# ---------------------------------------------------------------------------
# polynomial helpers over Fraction (dense, low-degree)


def _poly_trim(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return p[:n]


def _poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _poly_trim(tuple(out))


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(tuple(out))


def _poly_divmod(p, m):
    p = list(p)
    dm = len(m) - 1
    lead = m[-1]
    q = [Fraction(0)] * max(len(p) - dm, 0)
    for i in range(len(p) - 1, dm - 1, -1):
        c = p[i] / lead
        if c:
            q[i - dm] = c
            for j in range(dm + 1):
                p[i - dm + j] -= c * m[j]
    return _poly_trim(tuple(q)), _poly_trim(tuple(p[:dm]))


def _poly_gcd_ext(a, b):
    # returns (g, s, t) with s*a + t*b = g over Q[x]
    r0, r1 = a, b
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_add(s0, _poly_mul(tuple(-c for c in q), s1))
        t0, t1 = t1, _poly_add(t0, _poly_mul(tuple(-c for c in q), t1))
    return r0, s0, t0


# ---------------------------------------------------------------------------
# fields


_FIELD_CACHE = {}


class TrigField:
    """Q(cos(pi/M)) for even M >= 2 (M == 2 is plain Q).

    Elements are tuples of Fractions: coefficients of powers of the
    generator alpha = cos(pi/M), reduced modulo its minimal polynomial.
    The representation is canonical, so structural equality of reduced
    tuples is exact value equality.
    """

    is_sqrt = False

    def __new__(cls, M):
        key = ("trig", M)
        f = _FIELD_CACHE.get(key)
        if f is not None:
            return f
        f = object.__new__(cls)
        _FIELD_CACHE[key] = f
        f._init(M)
        return f

    def _init(self, M):
        if M < 2 or M % 2:
            raise ScalarError("trig field modulus must be even and >= 2")
        self.M = M
        self.key = ("trig", M)
        x = sympy.Symbol("x")
        poly = sympy.minimal_polynomial(sympy.cos(sympy.pi / M), x, polys=True)
        self.minpoly = tuple(Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()[::-1])
        self.deg = len(self.minpoly) - 1
        # alpha^k reduced, for k up to 2*(deg-1), used by mul
        pows = [()] * (2 * self.deg - 1) if self.deg > 1 else [()]
        acc = (Fraction(1),)
        for k in range(max(2 * self.deg - 1, 1)):
            if k < len(pows):
                pows[k] = acc
            acc = _poly_divmod(_poly_mul(acc, (Fraction(0), Fraction(1))), self.minpoly)[1]
        self._pows = pows
        self._enc_gen = None
        self._mp_gen = {}

    # -- element constructors
    def zero(self):
        return ()

    def one(self):
        return (Fraction(1),)

    def from_fraction(self, c):
        c = Fraction(c)
        return (c,) if c else ()

    def gen(self):
        if self.deg == 1:
            # alpha is rational (M == 2: alpha = 0)
            return self.from_fraction(-self.minpoly[0] / self.minpoly[1])
        return (Fraction(0), Fraction(1))

    # -- arithmetic
    def add(self, a, b):
        return _poly_add(a, b)

    def neg(self, a):
        return tuple(-c for c in a)

    def sub(self, a, b):
        return _poly_add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        raw = _poly_mul(a, b)
        if len(raw) <= self.deg:
            return raw
        out = list(raw[: self.deg]) + [Fraction(0)] * (self.deg - len(raw[: self.deg]))
        for k in range(self.deg, len(raw)):
            ck = raw[k]
            if ck:
                for i, c in enumerate(self._pows[k]):
                    out[i] += ck * c
        return _poly_trim(tuple(out))

    def scale(self, a, c):
        if not c:
            return ()
        return tuple(x * c for x in a)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by exact zero")
        g, s, _ = _poly_gcd_ext(a, self.minpoly)
        if len(g) != 1:
            raise ScalarError("non-invertible element (minimal polynomial not irreducible?)")
        return _poly_divmod(self.scale(s, 1 / g[0]), self.minpoly)[1]

    def is_zero(self, a):
        return not a

    # -- numerics
    def _gen_enclosure(self):
        if self._enc_gen is None:
            a = self._mp_interval_gen(64)
            self._enc_gen = (_dn(float(mp.mpf(a.a))), _up(float(mp.mpf(a.b))))
        return self._enc_gen

    def _mp_interval_gen(self, prec):
        got = self._mp_gen.get(prec)
        if got is None:
            old = mp.iv.prec
            try:
                mp.iv.prec = prec
                got = mp.iv.cos(mp.iv.pi / self.M)
            finally:
                mp.iv.prec = old
            self._mp_gen[prec] = got
        return got

    def enclosure(self, a):
        if not a:
            return (0.0, 0.0)
        x = self._gen_enclosure()
        acc = _ifrac(a[-1])
        for c in reversed(a[:-1]):
            acc = _iadd(_imul(acc, x), _ifrac(c))
        return acc

    def mp_interval(self, a, prec):
        old = mp.iv.prec
        try:
            mp.iv.prec = prec
            if not a:
                return mp.iv.mpf(0)
            x = self._mp_interval_gen(prec)
            acc = mp.iv.mpf(a[-1].numerator) / a[-1].denominator
            for c in reversed(a[:-1]):
                acc = acc * x + mp.iv.mpf(c.numerator) / c.denominator
            return acc
        finally:
            mp.iv.prec = old

    def mp_value(self, a):
        # plain mpf at current mp working precision
        if not a:
            return mp.mpf(0)
        x = mp.cos(mp.pi / self.M)
        acc = mp.mpf(a[-1].numerator) / a[-1].denominator
        for c in reversed(a[:-1]):
            acc = acc * x + mp.mpf(c.numerator) / c.denominator
        return acc

    def sign(self, a):
        if not a:
            return 0
        if len(a) == 1:
            return -1 if a[0] < 0 else 1
        lo, hi = self.enclosure(a)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec = 128
        while True:
            v = self.mp_interval(a, prec)
            if v.a > 0:
                return 1
            if v.b < 0:
                return -1
            prec *= 2
            if prec > 1 << 20:
                raise ScalarError("sign refinement failed to converge")

    # -- basis for PSLQ
    def basis_dim(self):
        return self.deg

    def basis_mp(self):
        x = mp.cos(mp.pi / self.M)
        out = [mp.mpf(1)]
        for _ in range(self.deg - 1):
            out.append(out[-1] * x)
        return out

    def from_basis_coeffs(self, coeffs):
        return _poly_trim(tuple(coeffs))

    def basis_coeffs(self, a):
        return list(a) + [Fraction(0)] * (self.deg - len(a))

    def __repr__(self):
        return "TrigField(%d)" % self.M


QQ = TrigField(2)


class SqrtField:
    """base(sqrt(rad)) for a non-negative, non-square element rad of base.

    Elements are pairs (u, v) of base elements meaning u + v*sqrt(rad).
    """

    is_sqrt = True

    def __new__(cls, base, rad):
        key = ("sqrt", base.key, rad)
        f = _FIELD_CACHE.get(key)
        if f is not None:
            return f
        f = object.__new__(cls)
        _FIELD_CACHE[key] = f
        f._init(base, rad, key)
        return f

    def _init(self, base, rad, key):
        self.base = base
        self.rad = rad
        self.key = key
        self._enc_gen = None
        self._mp_gen = {}

    def zero(self):
        return (self.base.zero(), self.base.zero())

    def one(self):
        return (self.base.one(), self.base.zero())

    def from_fraction(self, c):
        return (self.base.from_fraction(c), self.base.zero())

    def gen(self):
        return (self.base.zero(), self.base.one())

    def lift(self, a):
        return (a, self.base.zero())

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def sub(self, a, b):
        return (self.base.sub(a[0], b[0]), self.base.sub(a[1], b[1]))

    def mul(self, a, b):
        F = self.base
        u = F.add(F.mul(a[0], b[0]), F.mul(F.mul(a[1], b[1]), self.rad))
        v = F.add(F.mul(a[0], b[1]), F.mul(a[1], b[0]))
        return (u, v)

    def scale(self, a, c):
        return (self.base.scale(a[0], c), self.base.scale(a[1], c))

    def inv(self, a):
        F = self.base
        if F.is_zero(a[0]) and F.is_zero(a[1]):
            raise ZeroDivisionError("division by exact zero")
        # conj / norm; norm = u^2 - v^2 * rad is zero only for a zero
        # divisor, which can occur only if rad was secretly a square
        norm = F.sub(F.mul(a[0], a[0]), F.mul(F.mul(a[1], a[1]), self.rad))
        if F.is_zero(norm):
            raise ScalarError(
                "zero divisor in square-root extension: radicand was a "
                "square that reconstruction missed")
        ninv = F.inv(norm)
        return (F.mul(a[0], ninv), F.neg(F.mul(a[1], ninv)))

    def is_zero(self, a):
        return self.base.is_zero(a[0]) and self.base.is_zero(a[1])

    def _gen_enclosure(self):
        if self._enc_gen is None:
            self._enc_gen = _isqrt_iv(self.base.enclosure(self.rad))
        return self._enc_gen

    def _mp_interval_gen(self, prec):
        got = self._mp_gen.get(prec)
        if got is None:
            old = mp.iv.prec
            try:
                mp.iv.prec = prec
                r = self.base.mp_interval(self.rad, prec)
                if r.a < 0:
                    r = mp.iv.mpf([0, r.b])
                got = mp.iv.sqrt(r)
            finally:
                mp.iv.prec = old
            self._mp_gen[prec] = got
        return got

    def enclosure(self, a):
        return _iadd(self.base.enclosure(a[0]),
                     _imul(self.base.enclosure(a[1]), self._gen_enclosure()))

    def mp_interval(self, a, prec):
        old = mp.iv.prec
        try:
            mp.iv.prec = prec
            return (self.base.mp_interval(a[0], prec)
                    + self.base.mp_interval(a[1], prec) * self._mp_interval_gen(prec))
        finally:
            mp.iv.prec = old

    def mp_value(self, a):
        return (self.base.mp_value(a[0])
                + self.base.mp_value(a[1]) * mp.sqrt(self.base.mp_value(self.rad)))

    def sign(self, a):
        u, v = a
        F = self.base
        su = F.sign(u)
        sv = F.sign(v)
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        lo, hi = self.enclosure(a)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        # |u| vs |v|*sqrt(rad), decided exactly in the base field
        d = F.sub(F.mul(u, u), F.mul(F.mul(v, v), self.rad))
        sd = F.sign(d)
        return 0 if sd == 0 else su * sd

    def basis_dim(self):
        return 2 * self.base.basis_dim()

    def basis_mp(self):
        b = self.base.basis_mp()
        t = mp.sqrt(self.base.mp_value(self.rad))
        return b + [x * t for x in b]

    def from_basis_coeffs(self, coeffs):
        n = self.base.basis_dim()
        return (self.base.from_basis_coeffs(coeffs[:n]),
                self.base.from_basis_coeffs(coeffs[n:]))

    def basis_coeffs(self, a):
        return self.base.basis_coeffs(a[0]) + self.base.basis_coeffs(a[1])

    def __repr__(self):
        return "SqrtField(%r)" % (self.base,)


# ---------------------------------------------------------------------------
# field unification


def _tower_parts(field):
    rads = []
    while field.is_sqrt:
        rads.append((field.base, field.rad))
        field = field.base
    return field, list(reversed(rads))


def _embed_trig(src, dst):
    """Return a function mapping TrigField(src) elements into TrigField(dst)."""
    if src.M == dst.M:
        return lambda a: a
    k = dst.M // src.M
    # image of alpha_src = cos(k * pi/dst.M) = T_k(alpha_dst)
    img = _cheb_elem(dst, k)

    def emb(a):
        if not a:
            return dst.zero()
        acc = dst.from_fraction(a[-1])
        for c in reversed(a[:-1]):
            acc = dst.add(dst.mul(acc, img), dst.from_fraction(c))
        return acc

    return emb


def _sqrt_in_field(field, x):
    """Return y in field with y*y == x and y >= 0, or None.

    Detection is numeric (PSLQ) but the candidate is verified exactly, so a
    positive answer is rigorous.  A miss merely grows the tower by one level.
    """
    if field.is_zero(x):
        return field.zero()
    if field.is_sqrt:
        # x might be the radicand itself (common when merging towers)
        if field.base.is_zero(x[1]) and x[0] == field.rad:
            return field.gen()
    if isinstance(field, TrigField) and field.deg == 1:
        c = x[0] if x else Fraction(0)
        if c < 0:
            return None
        num = math.isqrt(c.numerator)
        den = math.isqrt(c.denominator)
        if num * num == c.numerator and den * den == c.denominator:
            return field.from_fraction(Fraction(num, den))
        return None
    dim = field.basis_dim()
    for extra in (40, 120):
        wdps = extra + 6 * dim
        with mp.workdps(wdps):
            xv = field.mp_value(x)
            if xv < 0:
                xv = -xv
            target = mp.sqrt(xv)
            vec = [target] + field.basis_mp()
            try:
                rel = mp.pslq(vec, maxcoeff=10 ** 14, maxsteps=200000)
            except Exception:
                rel = None
        if not rel or rel[0] == 0:
            continue
        coeffs = [Fraction(-c, rel[0]) for c in rel[1:]]
        y = field.from_basis_coeffs(coeffs)
        if field.is_zero(field.sub(field.mul(y, y), x)):
            if field.sign(y) < 0:
                y = field.neg(y)
            return y
    return None


_UNIFY_CACHE = {}


def _unify(fa, fb):
    """Return (field, lift_a, lift_b) embedding both fields into one."""
    if fa is fb:
        return fa, (lambda a: a), (lambda b: b)
    key = (fa.key, fb.key)
    got = _UNIFY_CACHE.get(key)
    if got is not None:
        return got
    ta, rads_a = _tower_parts(fa)
    tb, rads_b = _tower_parts(fb)
    M = ta.M * tb.M // math.gcd(ta.M, tb.M)
    G = TrigField(M)
    emb_a = _embed_trig(ta, G)
    emb_b = _embed_trig(tb, G)

    def stack(G, emb, rads):
        for _, rad in rads:
            r_img = emb(rad)

            y = _sqrt_in_field(G, r_img)
            if y is not None:
                emb = _compose_collapse(G, emb, y)
            else:
                G2 = SqrtField(G, r_img)
                emb = _compose_extend(G2, emb)
                G = G2
        return G, emb

    def _compose_collapse(G, emb, y):
        def f(a, emb=emb, G=G, y=y):
            u, v = a
            return G.add(emb(u), G.mul(emb(v), y))
        return f

    def _compose_extend(G2, emb):
        def f(a, emb=emb, G2=G2):
            u, v = a
            return (emb(u), emb(v))
        return f

    G1, emb_a = stack(G, emb_a, rads_a)
    # lift emb_b's codomain from G up to G1
    lifts = []
    H = G1
    while H is not G:
        lifts.append(H)
        H = H.base
    for H in reversed(lifts):
        emb_b = (lambda e, H=H, emb_b=emb_b: H.lift(emb_b(e)))
    G2, emb_b = stack(G1, emb_b, rads_b)
    H = G2
    chain = []
    while H is not G1:
        chain.append(H)
        H = H.base
    for H in reversed(chain):
        emb_a = (lambda e, H=H, emb_a=emb_a: H.lift(emb_a(e)))
    got = (G2, emb_a, emb_b)
    _UNIFY_CACHE[key] = got
    return got


@lru_cache(maxsize=None)
def _cheb_pair(M, k):
    F = TrigField(M)
    if k == 0:
        return (F.one(), F.zero())
    if k == 1:
        return (F.gen(), F.one())
    tm2, tm1 = _cheb_pair(M, k - 2)[0], _cheb_pair(M, k - 1)[0]
    two_x = F.scale(F.gen(), Fraction(2))
    return (F.sub(F.mul(two_x, tm1), tm2), tm1)


def _cheb_elem(F, k):
    """T_k(alpha) as an element of F = TrigField(M): equals cos(k*pi/M)."""
    return _cheb_pair(F.M, k)[0]


# ---------------------------------------------------------------------------
# Scalar


class Scalar:
    __slots__ = ("field", "elem", "_sign", "_enc")
    __hash__ = None

    def __init__(self, field, elem):
        self.field = field
        self.elem = elem
        self._sign = None
        self._enc = None

    # -- coercion
    @staticmethod
    def _lift(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(QQ, QQ.from_fraction(Fraction(x)))
        return NotImplemented

    def _pair(self, other):
        other = Scalar._lift(other)
        if other is NotImplemented:
            return None
        if self.field is other.field:
            return self.field, self.elem, other.elem
        F, la, lb = _unify(self.field, other.field)
        return F, la(self.elem), lb(other.elem)

    # -- arithmetic
    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return Scalar(F, F.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return Scalar(F, F.sub(a, b))

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return Scalar(F, F.sub(b, a))

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return Scalar(F, F.mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        if F.is_zero(b) or Scalar(F, b).sign() == 0:
            raise ZeroDivisionError("division by exact zero")
        return Scalar(F, F.mul(a, F.inv(b)))

    def __rtruediv__(self, other):
        other = Scalar._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.elem))

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        F = self.field
        acc = Scalar(F, F.one())
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- predicates
    def sign(self):
        if self._sign is None:
            if self.field.is_zero(self.elem):
                self._sign = 0
            else:
                lo, hi = self.enclosure()
                if lo > 0:
                    self._sign = 1
                elif hi < 0:
                    self._sign = -1
                else:
                    self._sign = self.field.sign(self.elem)
        return self._sign

    def is_zero(self):
        return self.sign() == 0

    def enclosure(self):
        if self._enc is None:
            self._enc = self.field.enclosure(self.elem)
        return self._enc

    def _cmp(self, other, op):
        other = Scalar._lift(other)
        if other is NotImplemented:
            return NotImplemented
        ea = self.enclosure()
        eb = other.enclosure()
        if eb[1] < ea[0]:
            return op(1)
        if ea[1] < eb[0]:
            return op(-1)
        return op((self - other).sign())

    def __eq__(self, other):
        other = Scalar._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field is other.field and self.elem == other.elem:
            return True
        ea = self.enclosure()
        eb = other.enclosure()
        if ea[0] > eb[1] or eb[0] > ea[1]:
            return False
        return (self - other).sign() == 0

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __lt__(self, other):
        return self._cmp(other, lambda s: s < 0)

    def __le__(self, other):
        return self._cmp(other, lambda s: s <= 0)

    def __gt__(self, other):
        return self._cmp(other, lambda s: s > 0)

    def __ge__(self, other):
        return self._cmp(other, lambda s: s >= 0)

    def key(self):
        """Canonical hashable key.  Equal values in the *same field* have
        equal keys; callers must coerce to a common field first."""
        return (self.field.key, self.elem)

    # -- output
    def to_float(self):
        lo, hi = self.enclosure()
        if math.isfinite(lo) and math.isfinite(hi) and hi - lo < 1e-9:
            return (lo + hi) / 2
        with mp.workprec(80):
            return float(self.field.mp_value(self.elem))

    def approx(self, digits):
        return approx(self, digits)

    def __repr__(self):
        return "Scalar(~%s)" % format(self.to_float(), ".12g")

    def __str__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# public constructors and operations


def rat(p, q=1):
    """The exact rational p/q."""
    if q == 0:
        raise ZeroDivisionError("division by exact zero")
    return Scalar(QQ, QQ.from_fraction(Fraction(p, q)))


ZERO = rat(0)
ONE = rat(1)


def _angle_fraction(angle):
    if isinstance(angle, tuple):
        angle = Fraction(angle[0], angle[1])
    else:
        angle = Fraction(angle)
    return angle


def cos_pi(angle):
    """cos(angle * pi) for a rational angle, exactly."""
    a = _angle_fraction(angle) % 2
    if a > 1:
        a = 2 - a
    q = a.denominator
    p = a.numerator
    M = q if q % 2 == 0 else 2 * q
    if M < 2:
        M = 2
    F = TrigField(M)
    return Scalar(F, _cheb_elem(F, p * (M // q)))


def sin_pi(angle):
    """sin(angle * pi) for a rational angle, exactly."""
    return cos_pi(Fraction(1, 2) - _angle_fraction(angle))


def trig_pi(kind, angle):
    if kind == "cos":
        return cos_pi(angle)
    if kind == "sin":
        return sin_pi(angle)
    raise ScalarError("unknown trig kind %r" % (kind,))


def sqrt_nonneg(x):
    """Exact square root of a non-negative scalar."""
    x = Scalar._lift(x)
    s = x.sign()
    if s < 0:
        raise ScalarError("square root of a negative value")
    if s == 0:
        return rat(0)
    y = _sqrt_in_field(x.field, x.elem)
    if y is not None:
        return Scalar(x.field, y)
    F = SqrtField(x.field, x.elem)
    return Scalar(F, F.gen())


def sign(x):
    return Scalar._lift(x).sign()


def _floor_abs_scaled(x, digits):
    """floor(|x| * 10^digits) as an int, exactly."""
    v = abs(x) * (10 ** digits)
    prec = 64
    while True:
        iv = v.field.mp_interval(v.elem, prec)
        lo = int(mp.floor(mp.mpf(iv.a)))
        hi = int(mp.floor(mp.mpf(iv.b)))
        if lo == hi:
            return lo
        if hi - lo == 1:
            c = (v - hi).sign()
            return hi if c >= 0 else lo
        prec *= 2
        if prec > 1 << 20:
            raise ScalarError("decimal truncation failed to converge")


def approx(x, digits):
    """Decimal string of x truncated (not rounded) to `digits` fractional digits."""
    if digits < 1:
        raise ScalarError("digits must be >= 1")
    x = Scalar._lift(x)
    n = _floor_abs_scaled(x, digits)
    whole, frac = divmod(n, 10 ** digits)
    body = "%d.%0*d" % (whole, digits, frac)
    return "-" + body if x.sign() < 0 and n > 0 else body


# ---------------------------------------------------------------------------
# expression grammar
#
#   expr  := term { ("+"|"-") term }
#   term  := unary { ("*"|"/") unary }
#   unary := ["-"] atom
#   atom  := INT | INT "/" INT | "sqrt(" expr ")"
#          | "cos_pi(" RAT ")" | "sin_pi(" RAT ")" | "(" expr ")"
#   RAT   := INT [ "/" INT ]
#
# Whitespace is insignificant.


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ScalarParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.pos += 1

    def parse_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse_rat(self):
        num = self.parse_int()
        if self.peek() == "/":
            self.pos += 1
            den = self.parse_int()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_expr(self):
        v = self.parse_term()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                v = v + self.parse_term()
            elif c == "-":
                self.pos += 1
                v = v - self.parse_term()
            else:
                return v

    def parse_term(self):
        v = self.parse_unary()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                v = v * self.parse_unary()
            elif c == "/":
                self.pos += 1
                d = self.parse_unary()
                if d.sign() == 0:
                    self.error("division by zero")
                v = v / d
            else:
                return v

    def parse_unary(self):
        if self.peek() == "-":
            self.pos += 1
            return -self.parse_atom()
        return self.parse_atom()

    def parse_name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def parse_atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            v = self.parse_expr()
            self.expect(")")
            return v
        if c.isdigit():
            return rat(self.parse_rat())
        name = self.parse_name()
        if name == "sqrt":
            self.expect("(")
            arg = self.parse_expr()
            self.expect(")")
            if arg.sign() < 0:
                self.error("sqrt of negative value")
            return sqrt_nonneg(arg)
        if name in ("cos_pi", "sin_pi"):
            self.expect("(")
            a = self.parse_rat()
            self.expect(")")
            return cos_pi(a) if name == "cos_pi" else sin_pi(a)
        self.error("expected a value")


def parse_scalar(text):
    """Parse an expression-grammar string into an exact Scalar."""
    p = _Parser(text)
    v = p.parse_expr()
    p.skip_ws()
    if p.pos != len(p.text):
        p.error("trailing input")
    return v


def unify_all(values):
    """Coerce scalars into one common field; returns new Scalar list.

    Needed before algorithms that key dictionaries by Scalar.key(), where
    canonical representations must live in a single field.
    """
    values = [Scalar._lift(v) for v in values]
    if not values:
        return []
    F = values[0].field
    for _ in range(8):
        changed = False
        for v in values:
            F2, _, _ = _unify(F, v.field)
            if F2 is not F:
                F = F2
                changed = True
        if not changed:
            break
    out = []
    for v in values:
        if v.field is F:
            out.append(v)
        else:
            F2, _, lb = _unify(F, v.field)
            if F2 is not F:
                raise ScalarError("field unification did not converge")
            out.append(Scalar(F, lb(v.elem)))
    return out


def _format_fraction(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _format_elem(field, elem):
    if isinstance(field, TrigField):
        if not elem:
            return "0"
        gen = "cos_pi(1/%d)" % field.M
        parts = []
        for i, c in enumerate(elem):
            if not c:
                continue
            mag = _format_fraction(abs(c))
            factors = [mag] + [gen] * i
            if i and mag == "1":
                factors = [gen] * i
            term = "*".join(factors)
            parts.append(("-" if c < 0 else "+", term))
        out = ""
        for j, (s, term) in enumerate(parts):
            if j == 0:
                out = ("-" + term) if s == "-" else term
            else:
                out += s + term
        return out
    u, v = elem
    us = _format_elem(field.base, u)
    if field.base.is_zero(v):
        return us
    vs = _format_elem(field.base, v)
    rs = _format_elem(field.base, field.rad)
    vpart = "(%s)*sqrt(%s)" % (vs, rs)
    if field.base.is_zero(u):
        return vpart
    return "(%s)+%s" % (us, vpart)


def format_scalar(x):
    """Canonical expression-grammar string; re-parses to an equal value."""
    x = Scalar._lift(x)
    return _format_elem(x.field, x.elem)

"""Exact arithmetic in cyclotomic fields Q(zeta_N) and formal quadratic extensions.

Elements are dense rational coordinate vectors over the power basis
1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial.  Internally a
vector is stored as integer numerators plus one positive common denominator,
which keeps the hot paths (convolution + monic reduction) in machine/big-int
arithmetic with a single gcd-normalization per operation.

A context may carry one formal square root l with l^2 = c for a chosen base
element c.  The quotient ring K[l]/(l^2 - c) is used without deciding whether
c is a square in K: if it is not, the ring is a field and nothing special ever
happens; if it is, the first inversion of a zero divisor raises
ZeroDivisorEncountered carrying the discovered factorization.  Identities
proved by pure ring arithmetic in the quotient are valid for every embedding
of l.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import RootOfUnityUnavailable, ZeroDivisorEncountered

# ---------------------------------------------------------------------------
# integer polynomial helpers (dense, low-to-high coefficient lists)
# ---------------------------------------------------------------------------


def _int_poly_div_exact(num, den):
    """Divide integer polynomials exactly; den must be monic. Returns quotient."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("division not exact")
    return out


_cyclo_cache = {1: (-1, 1)}


def cyclotomic_polynomial(n):
    """Integer coefficients of the n-th cyclotomic polynomial (low-to-high)."""
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    _cyclo_cache[n] = result
    return result


def euler_phi(n):
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _conv(a, b):
    """Convolution of integer vectors, skipping zero entries."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _reduce_mod(vec, mod):
    """Reduce an integer vector in place modulo a monic integer polynomial."""
    m = len(mod) - 1
    for i in range(len(vec) - 1, m - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            off = i - m
            for j in range(m):
                cj = mod[j]
                if cj:
                    vec[off + j] -= c * cj
    return vec[:m] + [0] * (m - len(vec)) if len(vec) < m else vec[:m]


def _content(vec, den):
    g = den
    for c in vec:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


# ---------------------------------------------------------------------------
# contexts
# ---------------------------------------------------------------------------


class FieldContext:
    """Arithmetic context: Q(zeta_N), optionally extended by l with l^2 = c."""

    __slots__ = (
        "conductor",
        "degree",
        "modulus",
        "lambda_sq",
        "base",
        "dim",
        "signature",
        "_zero",
        "_one",
        "_root_cache",
    )

    def __init__(self, conductor, lambda_sq=None):
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = len(self.modulus) - 1
        if lambda_sq is not None:
            if not isinstance(lambda_sq, FieldElement):
                raise TypeError("lambda_sq must be a FieldElement of the base field")
            if lambda_sq.context.lambda_sq is not None:
                raise ValueError("nested quadratic extensions are not supported")
            if lambda_sq.context.conductor != conductor:
                raise ValueError("lambda_sq must live in the conductor-%d field" % conductor)
            if lambda_sq.is_zero():
                raise ValueError("lambda_sq must be nonzero")
            self.base = lambda_sq.context
            self.dim = 2 * self.degree
        else:
            self.base = self
            self.dim = self.degree
        self.lambda_sq = lambda_sq
        sig = (lambda_sq.nums, lambda_sq.den) if lambda_sq is not None else None
        self.signature = (conductor, sig)
        self._zero = FieldElement(self, (0,) * self.dim, 1)
        self._one = FieldElement(self, (1,) + (0,) * (self.dim - 1), 1)
        self._root_cache = {}

    # -- construction -------------------------------------------------------

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_int(self, k):
        return FieldElement(self, (int(k),) + (0,) * (self.dim - 1), 1)

    def from_rational(self, q):
        q = Fraction(q)
        return FieldElement(
            self, (q.numerator,) + (0,) * (self.dim - 1), q.denominator
        )

    def from_coords(self, coords):
        """Build an element from phi(N) (or 2*phi(N)) rational coordinates."""
        vals = [Fraction(c) for c in coords]
        if len(vals) == self.degree and self.dim == 2 * self.degree:
            vals = vals + [Fraction(0)] * self.degree
        if len(vals) != self.dim:
            raise ValueError(
                "expected %d coordinates, got %d" % (self.dim, len(vals))
            )
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        nums = tuple(int(v * den) for v in vals)
        return _make(self, nums, den)

    def zeta(self):
        """The distinguished primitive N-th root of unity (the class of x)."""
        if self.degree == 1:
            # conductor 1 or 2: zeta is rational (1 or -1).
            return self.from_int(1 if self.conductor == 1 else -1)
        nums = [0] * self.dim
        nums[1] = 1
        return FieldElement(self, tuple(nums), 1)

    def sqrt_generator(self):
        """The formal square root l (extended contexts only)."""
        if self.lambda_sq is None:
            raise ValueError("context has no quadratic extension")
        nums = [0] * self.dim
        nums[self.degree] = 1
        return FieldElement(self, tuple(nums), 1)

    def from_parts(self, u, v):
        """Assemble u + v*l from two base-field elements."""
        if self.lambda_sq is None:
            raise ValueError("context has no quadratic extension")
        den = u.den * v.den // gcd(u.den, v.den)
        fu = den // u.den
        fv = den // v.den
        nums = tuple(c * fu for c in u.nums) + tuple(c * fv for c in v.nums)
        return _make(self, nums, den)

    def embed(self, e):
        """Lift a base-field element into this (possibly extended) context."""
        if e.context is self or e.context.signature == self.signature:
            return FieldElement(self, e.nums, e.den)
        if e.context.signature != (self.base.conductor, None):
            raise ValueError("element does not belong to the base field")
        if self.lambda_sq is None:
            return FieldElement(self, e.nums, e.den)
        return FieldElement(self, e.nums + (0,) * self.degree, e.den)

    def extend_sqrt(self, c):
        """Return the context K[l]/(l^2 - c); c a nonzero element of this field."""
        if self.lambda_sq is not None:
            raise ValueError("context already carries a quadratic extension")
        return FieldContext(self.conductor, lambda_sq=c)

    # -- roots of unity -----------------------------------------------------

    def root_of_unity_order_available(self, n):
        N = self.conductor
        return n >= 1 and (N % n == 0 or (N % 2 == 1 and (2 * N) % n == 0))

    def suggested_conductor(self, n):
        N = self.conductor
        m = N * n // gcd(N, n)
        if m % 4 == 2:
            m //= 2
        return m

    def root_of_unity(self, n):
        """A primitive n-th root of unity, or RootOfUnityUnavailable.

        zeta_n exists in Q(zeta_N) iff n | N, or N is odd and n | 2N (the
        group of roots of unity has order N for even N and 2N for odd N).
        """
        if n < 1:
            raise ValueError("order must be positive")
        cached = self._root_cache.get(n)
        if cached is not None:
            return cached
        N = self.conductor
        if N % n == 0:
            result = self.zeta() ** (N // n)
        elif N % 2 == 1 and (2 * N) % n == 0:
            # zeta_{2N} = -zeta_N^((N+1)/2); raise it to 2N/n.
            result = (-(self.zeta() ** ((N + 1) // 2))) ** (2 * N // n)
        else:
            raise RootOfUnityUnavailable(n, N, self.suggested_conductor(n))
        self._root_cache[n] = result
        return result

    # -- misc ---------------------------------------------------------------

    def compatible(self, other):
        return self is other or self.signature == other.signature

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        if self.lambda_sq is None:
            return "FieldContext(Q(zeta_%d))" % self.conductor
        return "FieldContext(Q(zeta_%d)[l], l^2 = %s)" % (
            self.conductor,
            self.lambda_sq,
        )


def _make(ctx, nums, den):
    """Normalize (nums, den) to lowest terms and wrap."""
    if den < 0:
        den = -den
        nums = tuple(-c for c in nums)
    g = _content(nums, den)
    if g > 1:
        nums = tuple(c // g for c in nums)
        den //= g
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if not any(nums):
        den = 1
    return FieldElement(ctx, tuple(nums), den)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class FieldElement:
    """Immutable element of a FieldContext; equality is coordinate-wise."""

    __slots__ = ("context", "nums", "den")

    def __init__(self, context, nums, den):
        self.context = context
        self.nums = nums
        self.den = den

    # -- predicates / views -------------------------------------------------

    def is_zero(self):
        return not any(self.nums)

    def is_one(self):
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self):
        return not any(self.nums[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def coords(self):
        """Rational coordinates over the power basis (length dim)."""
        return tuple(Fraction(c, self.den) for c in self.nums)

    def parts(self):
        """(u, v) base-field elements with self = u + v*l."""
        ctx = self.context
        if ctx.lambda_sq is None:
            raise ValueError("context has no quadratic extension")
        m = ctx.degree
        base = ctx.base
        u = _make(base, self.nums[:m], self.den)
        v = _make(base, self.nums[m:], self.den)
        return u, v

    def key(self):
        """Hashable canonical key (context-free coordinate data)."""
        return (self.nums, self.den)

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if not self.context.compatible(other.context):
                raise ValueError("elements from incompatible contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.from_rational(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return _make(
                self.context,
                tuple(a + b for a, b in zip(self.nums, other.nums)),
                d1,
            )
        g = gcd(d1, d2)
        f1 = d2 // g
        f2 = d1 // g
        return _make(
            self.context,
            tuple(a * f1 + b * f2 for a, b in zip(self.nums, other.nums)),
            d1 * f1,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.context, tuple(-c for c in self.nums), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.context
        mod = ctx.modulus
        m = ctx.degree
        if ctx.lambda_sq is None:
            vec = _reduce_mod(_conv(self.nums, other.nums), mod)
            return _make(ctx, tuple(vec), self.den * other.den)
        u1, v1 = self.nums[:m], self.nums[m:]
        u2, v2 = other.nums[:m], other.nums[m:]
        c = ctx.lambda_sq
        uu = _reduce_mod(_conv(u1, u2), mod)
        vv = _reduce_mod(_conv(v1, v2), mod)
        uv = _reduce_mod(
            [a + b for a, b in zip(_conv(u1, v2), _conv(v1, u2))], mod
        )
        # u-part: u1*u2 + c*v1*v2, common denominator d1*d2*c.den
        cvv = _reduce_mod(_conv(vv, c.nums), mod)
        upart = [a * c.den + b for a, b in zip(uu, cvv)]
        vpart = [a * c.den for a in uv]
        return _make(ctx, tuple(upart + vpart), self.den * other.den * c.den)

    __rmul__ = __mul__

    def inverse(self):
        ctx = self.context
        if ctx.lambda_sq is None:
            return _inv_base(self)
        u, v = self.parts()
        c = ctx.lambda_sq
        norm = u * u - c * (v * v)
        if norm.is_zero():
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero")
            # u^2 = c v^2 with (u, v) != 0 forces v != 0; r = u/v satisfies r^2 = c.
            root = u / v
            raise ZeroDivisorEncountered(root)
        inv_norm = _inv_base(norm)
        return ctx.from_parts(u * inv_norm, -(v * inv_norm))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.context.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.context.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            self.context.compatible(other.context)
            and self.nums == other.nums
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.nums, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        ctx = self.context
        m = ctx.degree
        names = []
        for i, c in enumerate(self.nums):
            if not c:
                continue
            q = Fraction(c, self.den)
            if i == 0:
                names.append(str(q))
            else:
                var = "z" if i < m else "l"
                e = i if i < m else i - m
                pw = var if e <= 1 else "%s^%d" % (var, e)
                if i >= m and e >= 1:
                    pw = "z^%d*l" % e if e > 1 else "z*l"
                names.append(pw if q == 1 else "%s*%s" % (q, pw))
        return " + ".join(names) if names else "0"


def _inv_base(e):
    """Inverse in the plain cyclotomic field via extended Euclid over Q."""
    if e.is_zero():
        raise ZeroDivisionError("inverse of zero")
    if e.context.lambda_sq is not None:
        raise ValueError("_inv_base expects a plain cyclotomic element")
    if e.is_rational():
        q = 1 / e.as_rational()
        return e.context.from_rational(q)
    # run over Fractions; moduli are small so this is not a hot path
    a = [Fraction(c, e.den) for c in e.nums]
    while a and a[-1] == 0:
        a.pop()
    mod = [Fraction(c) for c in e.context.modulus]
    s = _poly_modinv_frac(a, mod)
    den = 1
    for q in s:
        den = den * q.denominator // gcd(den, q.denominator)
    nums = [int(q * den) for q in s]
    nums += [0] * (e.context.degree - len(nums))
    return _make(e.context, tuple(nums), den)


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _fp_trim(a[:db])


def _poly_modinv_frac(a, mod):
    """s with s*a = 1 (mod mod), over Fractions; mod irreducible over Q."""
    r0, r1 = list(mod), list(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _fp_divmod(r0, r1)
        r0, r1 = r1, r
        # s_new = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, x in enumerate(q):
            if x:
                for j, y in enumerate(s1):
                    if y:
                        prod[i + j] += x * y
        ln = max(len(s0), len(prod))
        s_new = [
            (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
            for i in range(ln)
        ]
        s0, s1 = s1, _fp_trim(s_new)
    # r0 is the gcd; must be a nonzero constant since mod is irreducible
    if len(r0) != 1:
        raise ArithmeticError("modulus not irreducible or element not invertible")
    c = r0[0]
    _, s0 = _fp_divmod([x / c for x in s0], mod)
    return s0


def multiplicative_order(e, cap=2048):
    """Order of e in the multiplicative group, or None if it exceeds cap."""
    one = e.context.one()
    acc = e
    for k in range(1, cap + 1):
        if acc == one:
            return k
        acc = acc * e
    return None

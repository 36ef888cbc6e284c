"""Projective plane geometry and ternary forms over a field context.

Points and lines are stored in a canonical scaling (first nonzero coordinate
equal to 1) so that equality and hashing are projective.  Ternary forms are
sparse exponent dictionaries; restriction to a line produces a binary form in
a parametrization by two canonical spanning points, from which intersection
multiplicities and full intersection profiles are computed exactly.
"""

from __future__ import annotations

from .errors import (
    LineContainedInCurve,
    NotSmooth,
    PointNotOnCurve,
    PointNotOnLine,
)
from .unipoly import UniPoly, squarefree_decomposition


def _canonicalize(coords):
    """Scale a nonzero coordinate tuple so its first nonzero entry is 1."""
    pivot = None
    for c in coords:
        if not c.is_zero():
            pivot = c
            break
    if pivot is None:
        raise ValueError("all coordinates are zero")
    if pivot.is_one():
        return tuple(coords)
    inv = pivot.inverse()
    return tuple(c * inv for c in coords)


class ProjPoint:
    """Point of the projective plane, canonically scaled."""

    __slots__ = ("context", "coords")

    def __init__(self, context, coords):
        coords = [context.embed(c) if c.context is not context else c for c in coords]
        if len(coords) != 3:
            raise ValueError("a plane point needs 3 coordinates")
        self.context = context
        self.coords = _canonicalize(coords)

    @classmethod
    def from_ints(cls, context, ints):
        return cls(context, [context.from_int(k) for k in ints])

    def key(self):
        return tuple(c.key() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "(%r : %r : %r)" % self.coords


class ProjLine:
    """Line a*X + b*Y + c*Z = 0, coefficients canonically scaled."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context, coeffs):
        coeffs = [context.embed(c) if c.context is not context else c for c in coeffs]
        if len(coeffs) != 3:
            raise ValueError("a line needs 3 coefficients")
        self.context = context
        self.coeffs = _canonicalize(coeffs)

    @classmethod
    def from_ints(cls, context, ints):
        return cls(context, [context.from_int(k) for k in ints])

    @classmethod
    def through(cls, p, q):
        """The unique line through two distinct points (cross product)."""
        if p == q:
            raise ValueError("points coincide; no unique line")
        a, b = p.coords, q.coords
        return cls(
            p.context,
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ],
        )

    def evaluate(self, point):
        return sum(
            (c * x for c, x in zip(self.coeffs, point.coords)),
            self.context.zero(),
        )

    def contains(self, point):
        return self.evaluate(point).is_zero()

    def spanning_points(self):
        """Two canonical points spanning the line.

        With j the first index where the line has a nonzero coefficient, the
        points are e_k - (coeff_k / coeff_j) e_j for the two indices k != j,
        in increasing order of k.
        """
        ctx = self.context
        j = next(i for i, c in enumerate(self.coeffs) if not c.is_zero())
        inv = self.coeffs[j].inverse()
        pts = []
        for k in range(3):
            if k == j:
                continue
            coords = [ctx.zero(), ctx.zero(), ctx.zero()]
            coords[k] = ctx.one()
            coords[j] = -(self.coeffs[k] * inv)
            pts.append(ProjPoint(ctx, coords))
        return pts[0], pts[1]

    def meet(self, other):
        """Intersection point of two distinct lines (cross product)."""
        if self == other:
            raise ValueError("lines coincide; no unique intersection")
        a, b = self.coeffs, other.coeffs
        return ProjPoint(
            self.context,
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ],
        )

    def key(self):
        return tuple(c.key() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Line[%r, %r, %r]" % self.coeffs


class ProjMatrix:
    """3x3 matrix acting on the plane; projective equality via canonical scaling."""

    __slots__ = ("context", "rows", "_ckey")

    def __init__(self, context, rows):
        rows = tuple(
            tuple(context.embed(c) if c.context is not context else c for c in row)
            for row in rows
        )
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("expected a 3x3 matrix")
        self.context = context
        self.rows = rows
        self._ckey = None

    @classmethod
    def identity(cls, context):
        one, zero = context.one(), context.zero()
        return cls(context, [[one, zero, zero], [zero, one, zero], [zero, zero, one]])

    @classmethod
    def from_ints(cls, context, rows):
        return cls(context, [[context.from_int(k) for k in row] for row in rows])

    @classmethod
    def from_columns(cls, p1, p2, p3):
        """Matrix whose columns are the coordinates of three points."""
        ctx = p1.context
        cols = [p1.coords, p2.coords, p3.coords]
        return cls(ctx, [[cols[j][i] for j in range(3)] for i in range(3)])

    @classmethod
    def diagonal(cls, context, entries):
        zero = context.zero()
        e = [context.embed(x) if hasattr(x, "context") else context.from_rational(x) for x in entries]
        return cls(context, [[e[0], zero, zero], [zero, e[1], zero], [zero, zero, e[2]]])

    def entry(self, i, j):
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        a, b = self.rows, other.rows
        return ProjMatrix(
            self.context,
            [
                [
                    a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                    for j in range(3)
                ]
                for i in range(3)
            ],
        )

    def det(self):
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def adjugate(self):
        r = self.rows
        cof = [
            [
                r[1][1] * r[2][2] - r[1][2] * r[2][1],
                r[0][2] * r[2][1] - r[0][1] * r[2][2],
                r[0][1] * r[1][2] - r[0][2] * r[1][1],
            ],
            [
                r[1][2] * r[2][0] - r[1][0] * r[2][2],
                r[0][0] * r[2][2] - r[0][2] * r[2][0],
                r[0][2] * r[1][0] - r[0][0] * r[1][2],
            ],
            [
                r[1][0] * r[2][1] - r[1][1] * r[2][0],
                r[0][1] * r[2][0] - r[0][0] * r[2][1],
                r[0][0] * r[1][1] - r[0][1] * r[1][0],
            ],
        ]
        return ProjMatrix(self.context, cof)

    def inverse(self):
        d = self.det()
        if d.is_zero():
            raise ZeroDivisionError("matrix is singular")
        inv = d.inverse()
        adj = self.adjugate()
        return ProjMatrix(
            self.context, [[c * inv for c in row] for row in adj.rows]
        )

    def transpose(self):
        r = self.rows
        return ProjMatrix(
            self.context, [[r[j][i] for j in range(3)] for i in range(3)]
        )

    def apply_to_point(self, point):
        r = self.rows
        x = point.coords
        return ProjPoint(
            self.context,
            [r[i][0] * x[0] + r[i][1] * x[1] + r[i][2] * x[2] for i in range(3)],
        )

    def apply_to_line(self, line):
        """Image of a line under the point action x -> Mx (covector * M^-1)."""
        minv = self.inverse()
        a = line.coeffs
        r = minv.rows
        return ProjLine(
            self.context,
            [a[0] * r[0][j] + a[1] * r[1][j] + a[2] * r[2][j] for j in range(3)],
        )

    def canonical_key(self):
        """Hashable key invariant under scalar rescaling of the matrix."""
        if self._ckey is None:
            flat = [c for row in self.rows for c in row]
            pivot = next((c for c in flat if not c.is_zero()), None)
            if pivot is None:
                raise ValueError("zero matrix")
            inv = pivot.inverse()
            self._ckey = tuple((c * inv).key() for c in flat)
        return self._ckey

    def proj_eq(self, other):
        return self.canonical_key() == other.canonical_key()

    def __eq__(self, other):
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return "ProjMatrix(%r)" % (self.rows,)


# ---------------------------------------------------------------------------
# ternary forms
# ---------------------------------------------------------------------------


class HomoPoly:
    """Homogeneous ternary form: sparse map (i, j, k) -> coefficient, i+j+k = d."""

    __slots__ = ("context", "degree", "terms")

    def __init__(self, context, degree, terms):
        clean = {}
        for exps, coeff in terms.items():
            i, j, k = exps
            if i + j + k != degree or min(i, j, k) < 0:
                raise ValueError(
                    "exponent %r incompatible with degree %d" % (exps, degree)
                )
            if not coeff.is_zero():
                clean[(i, j, k)] = coeff
        self.context = context
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_int_terms(cls, context, degree, int_terms):
        return cls(
            context,
            degree,
            {e: context.from_int(c) for e, c in int_terms.items()},
        )

    @classmethod
    def zero(cls, context, degree):
        return cls(context, degree, {})

    @classmethod
    def linear_form(cls, context, coeffs):
        return cls(
            context,
            1,
            {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]},
        )

    def is_zero(self):
        return not self.terms

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.context.zero())

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        out = dict(self.terms)
        zero = self.context.zero()
        for e, c in other.terms.items():
            out[e] = out.get(e, zero) + c
        return HomoPoly(self.context, self.degree, out)

    def __neg__(self):
        return HomoPoly(
            self.context, self.degree, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if s.is_zero():
            return HomoPoly.zero(self.context, self.degree)
        return HomoPoly(
            self.context, self.degree, {e: c * s for e, c in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, HomoPoly):
            return self.scale(
                other
                if type(other).__name__ == "FieldElement"
                else self.context.from_rational(other)
            )
        zero = self.context.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, zero) + c1 * c2
        return HomoPoly(self.context, self.degree + other.degree, out)

    __rmul__ = __mul__

    def power(self, k):
        ctx = self.context
        result = HomoPoly(ctx, 0, {(0, 0, 0): ctx.one()})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point):
        """Value at a point (depends on the chosen representative's scaling)."""
        ctx = self.context
        x, y, z = point.coords if isinstance(point, ProjPoint) else point
        d = self.degree
        px = _power_table(x, d, ctx)
        py = _power_table(y, d, ctx)
        pz = _power_table(z, d, ctx)
        acc = ctx.zero()
        for (i, j, k), c in self.terms.items():
            acc = acc + c * px[i] * py[j] * pz[k]
        return acc

    def vanishes_at(self, point):
        return self.evaluate(point).is_zero()

    def partial(self, var):
        """Partial derivative with respect to variable index 0, 1 or 2."""
        ctx = self.context
        out = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            ne = list(e)
            ne[var] -= 1
            out[tuple(ne)] = c * ctx.from_int(e[var])
        return HomoPoly(ctx, self.degree - 1, out)

    def gradient_at(self, point):
        return tuple(self.partial(v).evaluate(point) for v in range(3))

    def pullback(self, matrix):
        """The form x -> F(M x), computed by substituting row linear forms."""
        ctx = self.context
        d = self.degree
        rows = [
            HomoPoly.linear_form(ctx, matrix.rows[i]) for i in range(3)
        ]
        pows = [_form_power_table(rows[v], d) for v in range(3)]
        acc = HomoPoly.zero(ctx, d)
        for (i, j, k), c in self.terms.items():
            acc = acc + (pows[0][i] * pows[1][j] * pows[2][k]).scale(c)
        return acc

    def restrict_to_line(self, line):
        """Binary form coefficients of F(s*S1 + t*S2) on the line's spanning points.

        Returns the dense list [c_0, ..., c_d] with the restriction equal to
        sum c_m s^(d-m) t^m; parameter (1:0) is S1 and (0:1) is S2.
        """
        s1, s2 = line.spanning_points()
        return self.restrict_to_pencil(s1, s2)

    def restrict_to_pencil(self, p, q):
        """Binary form of F(s*P + t*Q) as a dense coefficient list in t-degree."""
        ctx = self.context
        d = self.degree
        # coordinate m of s*P + t*Q is the binary linear form (P_m, Q_m)
        lin = [[p.coords[m], q.coords[m]] for m in range(3)]
        pows = [_binary_power_table(lin[m], d, ctx) for m in range(3)]
        zero = ctx.zero()
        out = [zero] * (d + 1)
        for (i, j, k), c in self.terms.items():
            prod = _binary_mul(_binary_mul(pows[0][i], pows[1][j], ctx), pows[2][k], ctx)
            for m, v in enumerate(prod):
                if not v.is_zero():
                    out[m] = out[m] + c * v
        return out

    def __eq__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(sorted((e, c.key()) for e, c in self.terms.items()))))

    def proportional_to(self, other):
        """True when the two forms differ by a nonzero scalar factor."""
        if self.degree != other.degree:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        e0 = next(iter(sorted(self.terms)))
        ratio = other.terms[e0] * self.terms[e0].inverse()
        return all(
            other.terms[e] == c * ratio for e, c in self.terms.items()
        )

    def __repr__(self):
        names = ("X", "Y", "Z")
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                "%s^%d" % (names[v], e[v]) if e[v] > 1 else names[v]
                for v in range(3)
                if e[v] > 0
            )
            parts.append("(%r)%s" % (c, "*" + mono if mono else ""))
        return "HomoPoly[deg %d](%s)" % (self.degree, " + ".join(parts) or "0")


def _power_table(x, d, ctx):
    out = [ctx.one()]
    for _ in range(d):
        out.append(out[-1] * x)
    return out


def _form_power_table(form, d):
    ctx = form.context
    out = [HomoPoly(ctx, 0, {(0, 0, 0): ctx.one()})]
    for _ in range(d):
        out.append(out[-1] * form)
    return out


def _binary_mul(a, b, ctx):
    zero = ctx.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _binary_power_table(lin, d, ctx):
    out = [[ctx.one()]]
    for _ in range(d):
        out.append(_binary_mul(out[-1], lin, ctx))
    return out


# ---------------------------------------------------------------------------
# intersection theory with lines
# ---------------------------------------------------------------------------


def intersection_multiplicity(form, line, point):
    """Multiplicity of the curve/line intersection at a point of the line."""
    if not line.contains(point):
        raise PointNotOnLine("the point does not lie on the line")
    s1, s2 = line.spanning_points()
    other = s2 if point == s1 else s1
    coeffs = form.restrict_to_pencil(point, other)
    # parameter t = 0 is the point itself; multiplicity = t-adic valuation
    for m, c in enumerate(coeffs):
        if not c.is_zero():
            return m
    raise LineContainedInCurve("the line lies entirely on the curve")


def line_profile(form, line):
    """Multiset of intersection multiplicities of the line with the curve.

    Counts points over the algebraic closure: the restriction is factored by
    squarefree decomposition, a factor of degree e at multiplicity m
    contributing e geometric points of multiplicity m.  Returns a descending
    tuple whose sum is deg(form).
    """
    coeffs = form.restrict_to_line(line)
    if all(c.is_zero() for c in coeffs):
        raise LineContainedInCurve("the line lies entirely on the curve")
    ctx = form.context
    d = form.degree
    chart = UniPoly(ctx, coeffs)  # variable t; point (0:1) is at infinity ... no:
    # coeffs[m] multiplies s^(d-m) t^m, so as a polynomial in t (chart s = 1)
    # the degree deficiency d - deg counts the multiplicity at (0:1) = S2.
    mults = []
    deficiency = d - chart.degree()
    if deficiency > 0:
        mults.append(deficiency)
    for factor, mult in squarefree_decomposition(chart):
        mults.extend([mult] * factor.degree())
    assert sum(mults) == d
    return tuple(sorted(mults, reverse=True))


def tangent_line(form, point):
    """Tangent line at a smooth point of the curve."""
    if not form.vanishes_at(point):
        raise PointNotOnCurve("the point does not lie on the curve")
    grad = form.gradient_at(point)
    if all(g.is_zero() for g in grad):
        raise NotSmooth("the curve is singular at the given point")
    return ProjLine(form.context, list(grad))


def hessian_determinant(form):
    """Determinant of the matrix of second partials (a form of degree 3(d-2))."""
    second = [[form.partial(i).partial(j) for j in range(3)] for i in range(3)]

    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    return det3(second)


class PlaneCurve:
    """A smooth plane curve: a ternary form validated to have no singular points.

    Construction runs the exact smoothness decision procedure and raises
    NotSmooth when the form has a singular point over the algebraic closure.
    Pass check_smooth=False to skip the gate (e.g. for known-smooth pullbacks).
    """

    __slots__ = ("form", "context", "degree")

    def __init__(self, form, check_smooth=True):
        if form.is_zero() or form.degree < 4:
            raise ValueError(
                "a plane curve needs a nonzero form of degree >= 4 "
                "(below that, automorphisms need not be linear)"
            )
        if check_smooth:
            from .smoothness import is_smooth

            if not is_smooth(form):
                raise NotSmooth(
                    "the form has a singular point over the algebraic closure"
                )
        self.form = form
        self.context = form.context
        self.degree = form.degree

    def contains(self, point):
        return self.form.vanishes_at(point)

    def require_contains(self, point):
        if not self.contains(point):
            raise PointNotOnCurve("the point does not lie on the curve")

    def tangent_line(self, point):
        return tangent_line(self.form, point)

    def line_profile(self, line):
        return line_profile(self.form, line)

    def intersection_multiplicity(self, line, point):
        return intersection_multiplicity(self.form, line, point)

    def transform(self, matrix, check_smooth=False):
        """The curve with form F(M x); smooth whenever the source is."""
        return PlaneCurve(self.form.pullback(matrix), check_smooth=check_smooth)

    def __repr__(self):
        return "PlaneCurve(%r)" % (self.form,)

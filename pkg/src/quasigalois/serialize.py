"""JSON schemas and command-line literals for the toolkit's exact objects.

Schemas (all exact, no floating point):

- rational: string ``"p/q"`` with ``q > 0`` and ``gcd(p, q) = 1``; plain
  ``"p"`` when the denominator is 1.
- field element: ``{"conductor": N, "coords": [rational, ...]}`` with an
  optional ``"lambda_sq"`` element (of the plain conductor-``N`` field) when
  the element lives in a quadratic extension by a formal square root.
- field: ``{"conductor": N}`` with the same optional ``"lambda_sq"``.
- curve: ``{"field": field, "degree": d, "terms": [{"exps": [i, j, k],
  "coeff": element}, ...]}``.
- points and lines: 3-vectors (JSON lists) of field elements.
- census report: ``{"delta_prime": {"2": k, ...}, "delta": {...},
  "points": [{"point": vector, "order": n, "locus": "inner"|"outer",
  "axis": vector}, ...], "pairs": [...], "triples": [...],
  "certification": str}``.
- group: ``{"field": field, "matrices": [3x3 element grid, ...],
  "order": n, "histogram": {"1": 1, ...}}`` — a group export re-parses as a
  generator file.

Serialization is deterministic: term and point lists are sorted by exact
canonical keys, and dictionaries iterate in sorted order, so equal inputs
produce byte-identical JSON.

Command-line vectors use comma-separated exact literals: each entry is a sum
of terms ``p/q``, ``z^k`` (a power of the field's primitive root of unity) or
``p/q*z^k``, e.g. ``"1,z^4,0"`` or ``"3/2 - z^2, 1, 0"``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import FieldContext, FieldElement
from .errors import SchemaError
from .geometry import HomoPoly, PlaneCurve, ProjLine, ProjMatrix, ProjPoint
from .groups import order_histogram

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


# ---------------------------------------------------------------------------
# rationals


def rational_to_str(value):
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return "%d/%d" % (frac.numerator, frac.denominator)


def rational_from_str(text, path="rational"):
    if not isinstance(text, str):
        raise SchemaError(path, "expected a rational string, got %r" % (text,))
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise SchemaError(path, "not a rational 'p/q': %r" % text)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise SchemaError(path, "zero denominator in %r" % text)
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# field contexts and elements


def field_to_json(context):
    data = {"conductor": context.conductor}
    if context.lambda_sq is not None:
        data["lambda_sq"] = element_to_json(context.lambda_sq)
    return data


def field_from_json(data, path="field", max_conductor=None):
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    conductor = data.get("conductor")
    if not isinstance(conductor, int) or isinstance(conductor, bool):
        raise SchemaError(path + ".conductor", "expected an integer")
    if conductor < 1:
        raise SchemaError(path + ".conductor", "conductor must be positive")
    if max_conductor is not None and conductor > max_conductor:
        raise SchemaError(
            path + ".conductor",
            "conductor %d exceeds the configured maximum %d"
            % (conductor, max_conductor),
        )
    unknown = set(data) - {"conductor", "lambda_sq"}
    if unknown:
        raise SchemaError(path, "unknown keys %s" % sorted(unknown))
    base = FieldContext(conductor)
    if "lambda_sq" not in data:
        return base
    lam = element_from_json(
        data["lambda_sq"], path=path + ".lambda_sq", context=base
    )
    return base.extend_sqrt(lam)


def element_to_json(element):
    ctx = element.context
    data = {
        "conductor": ctx.conductor,
        "coords": [rational_to_str(c) for c in element.coords()],
    }
    if ctx.lambda_sq is not None:
        data["lambda_sq"] = element_to_json(ctx.lambda_sq)
    return data


def element_from_json(data, path="element", context=None):
    """Parse an element; with ``context`` given, also enforce membership."""
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    unknown = set(data) - {"conductor", "coords", "lambda_sq"}
    if unknown:
        raise SchemaError(path, "unknown keys %s" % sorted(unknown))
    if context is None:
        context = field_from_json(
            {k: v for k, v in data.items() if k != "coords"}, path=path
        )
    else:
        conductor = data.get("conductor")
        if conductor != context.conductor:
            raise SchemaError(
                path + ".conductor",
                "expected conductor %d, got %r" % (context.conductor, conductor),
            )
        has_ext = context.lambda_sq is not None
        if has_ext != ("lambda_sq" in data):
            raise SchemaError(
                path,
                "element and field disagree about the quadratic extension",
            )
        if has_ext:
            lam = element_from_json(
                data["lambda_sq"],
                path=path + ".lambda_sq",
                context=context.base,
            )
            if lam != context.lambda_sq:
                raise SchemaError(
                    path + ".lambda_sq",
                    "element lives in a different quadratic extension",
                )
    coords = data.get("coords")
    if not isinstance(coords, list):
        raise SchemaError(path + ".coords", "expected a list")
    if len(coords) != context.dim:
        raise SchemaError(
            path + ".coords",
            "expected %d coordinates, got %d" % (context.dim, len(coords)),
        )
    values = [
        rational_from_str(c, path="%s.coords[%d]" % (path, i))
        for i, c in enumerate(coords)
    ]
    return context.from_coords(values)


# ---------------------------------------------------------------------------
# points, lines, matrices


def _vector_to_json(coords):
    return [element_to_json(c) for c in coords]


def _vector_from_json(data, context, path):
    if not isinstance(data, list) or len(data) != 3:
        raise SchemaError(path, "expected a list of 3 field elements")
    return [
        element_from_json(c, path="%s[%d]" % (path, i), context=context)
        for i, c in enumerate(data)
    ]


def point_to_json(point):
    return _vector_to_json(point.coords)


def point_from_json(data, context, path="point"):
    coords = _vector_from_json(data, context, path)
    if all(c.is_zero() for c in coords):
        raise SchemaError(path, "projective point cannot be the zero vector")
    return ProjPoint(context, coords)


def line_to_json(line):
    return _vector_to_json(line.coeffs)


def line_from_json(data, context, path="line"):
    coeffs = _vector_from_json(data, context, path)
    if all(c.is_zero() for c in coeffs):
        raise SchemaError(path, "projective line cannot be the zero vector")
    return ProjLine(context, coeffs)


def matrix_to_json(matrix):
    return [
        [element_to_json(matrix.entry(i, j)) for j in range(3)]
        for i in range(3)
    ]


def matrix_from_json(data, context, path="matrix"):
    if not isinstance(data, list) or len(data) != 3:
        raise SchemaError(path, "expected a list of 3 rows")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError(
                "%s[%d]" % (path, i), "expected a list of 3 field elements"
            )
        rows.append(
            [
                element_from_json(
                    c, path="%s[%d][%d]" % (path, i, j), context=context
                )
                for j, c in enumerate(row)
            ]
        )
    return ProjMatrix(context, rows)


# ---------------------------------------------------------------------------
# curves


def curve_to_json(curve_or_form):
    form = getattr(curve_or_form, "form", curve_or_form)
    terms = [
        {"exps": list(exps), "coeff": element_to_json(coeff)}
        for exps, coeff in sorted(form.terms.items(), reverse=True)
    ]
    return {
        "field": field_to_json(form.context),
        "degree": form.degree,
        "terms": terms,
    }


def form_from_json(data, path="curve", max_conductor=None):
    """Parse the curve schema into a homogeneous form (no smoothness gate)."""
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    unknown = set(data) - {"field", "degree", "terms"}
    if unknown:
        raise SchemaError(path, "unknown keys %s" % sorted(unknown))
    if "field" not in data:
        raise SchemaError(path + ".field", "missing")
    context = field_from_json(
        data["field"], path=path + ".field", max_conductor=max_conductor
    )
    degree = data.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise SchemaError(path + ".degree", "expected a positive integer")
    raw_terms = data.get("terms")
    if not isinstance(raw_terms, list) or not raw_terms:
        raise SchemaError(path + ".terms", "expected a nonempty list")
    terms = {}
    for idx, item in enumerate(raw_terms):
        tpath = "%s.terms[%d]" % (path, idx)
        if not isinstance(item, dict) or set(item) != {"exps", "coeff"}:
            raise SchemaError(tpath, "expected keys exps and coeff")
        exps = item["exps"]
        if (
            not isinstance(exps, list)
            or len(exps) != 3
            or not all(
                isinstance(e, int) and not isinstance(e, bool) and e >= 0
                for e in exps
            )
        ):
            raise SchemaError(
                tpath + ".exps", "expected 3 non-negative integers"
            )
        if sum(exps) != degree:
            raise SchemaError(
                tpath + ".exps",
                "exponents %r do not sum to the degree %d" % (exps, degree),
            )
        key = tuple(exps)
        if key in terms:
            raise SchemaError(tpath + ".exps", "duplicate exponent %r" % exps)
        terms[key] = element_from_json(
            item["coeff"], path=tpath + ".coeff", context=context
        )
    form = HomoPoly(context, degree, terms)
    if form.is_zero():
        raise SchemaError(path + ".terms", "all coefficients are zero")
    return form


def curve_from_json(data, path="curve", max_conductor=None):
    """Parse the curve schema and verify smoothness (raises NotSmooth)."""
    return PlaneCurve(form_from_json(data, path, max_conductor))


# ---------------------------------------------------------------------------
# census reports and groups


def sorted_records(report):
    """The report's quasi-Galois records in canonical point order."""
    records = [r for r in report.records.values() if r.order >= 2]
    return sorted(records, key=lambda r: r.point.key())


def report_to_json(report):
    points = []
    for rec in sorted_records(report):
        points.append(
            {
                "point": point_to_json(rec.point),
                "order": rec.order,
                "locus": "inner" if rec.on_curve else "outer",
                "axis": line_to_json(rec.generator.axis),
            }
        )
    pairs = []
    for info in report.pairs:
        keyed = sorted(
            (info.rec1.point, info.rec2.point), key=lambda p: p.key()
        )
        pairs.append(
            {
                "points": [point_to_json(p) for p in keyed],
                "order": info.n,
                "third": None if info.third is None else point_to_json(info.third),
            }
        )
    pairs.sort(key=lambda d: str(d["points"]))
    triples = []
    for tri in report.triples:
        keyed = sorted(tri, key=lambda p: p.key())
        triples.append([point_to_json(p) for p in keyed])
    triples.sort(key=str)
    return {
        "delta_prime": {
            str(n): report.delta_prime[n] for n in sorted(report.delta_prime)
        },
        "delta": {str(n): report.delta[n] for n in sorted(report.delta)},
        "points": points,
        "pairs": pairs,
        "triples": triples,
        "certification": report.certification,
    }


def group_to_json(group):
    matrices = sorted(group, key=lambda m: m.canonical_key())
    histogram = order_histogram(group)
    return {
        "field": field_to_json(matrices[0].context),
        "matrices": [matrix_to_json(m) for m in matrices],
        "order": len(group),
        "histogram": {str(n): histogram[n] for n in sorted(histogram)},
    }


def generators_from_json(data, path="generators", max_conductor=None):
    """Parse a generator file: the group schema, ignoring order/histogram."""
    if not isinstance(data, dict):
        raise SchemaError(path, "expected an object")
    unknown = set(data) - {"field", "matrices", "order", "histogram"}
    if unknown:
        raise SchemaError(path, "unknown keys %s" % sorted(unknown))
    if "field" not in data:
        raise SchemaError(path + ".field", "missing")
    context = field_from_json(
        data["field"], path=path + ".field", max_conductor=max_conductor
    )
    raw = data.get("matrices")
    if not isinstance(raw, list) or not raw:
        raise SchemaError(path + ".matrices", "expected a nonempty list")
    return [
        matrix_from_json(m, context, path="%s.matrices[%d]" % (path, i))
        for i, m in enumerate(raw)
    ]


# ---------------------------------------------------------------------------
# command-line literals


_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<pz>z(?:\^(?P<pk>\d+))?))?
        |
        (?P<z>z(?:\^(?P<k>\d+))?)
    )
    \s*
    """,
    re.VERBOSE,
)


def scalar_from_literal(text, context, path="literal"):
    """Parse one exact scalar literal: sums of p/q, z^k and p/q*z^k terms."""
    s = text.strip()
    if not s:
        raise SchemaError(path, "empty literal")
    total = context.zero()
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise SchemaError(
                path, "cannot parse %r at position %d" % (text, pos)
            )
        sign = m.group("sign")
        if sign is None and not first:
            raise SchemaError(
                path, "missing + or - between terms in %r" % text
            )
        factor = -1 if sign == "-" else 1
        if m.group("coef") is not None:
            try:
                value = Fraction(m.group("coef")) * factor
            except ZeroDivisionError:
                raise SchemaError(
                    path, "zero denominator in %r" % m.group("coef")
                ) from None
            term = context.from_rational(value)
            if m.group("pz") is not None:
                k = int(m.group("pk") or 1)
                term = term * context.zeta() ** k
        else:
            k = int(m.group("k") or 1)
            term = context.zeta() ** k
            if factor < 0:
                term = -term
        total = total + term
        pos = m.end()
        first = False
    return total


def vector_from_literal(text, context, path="vector"):
    """Parse a comma-separated 3-vector of exact scalar literals."""
    parts = text.split(",")
    if len(parts) != 3:
        raise SchemaError(
            path, "expected 3 comma-separated entries, got %d" % len(parts)
        )
    coords = [
        scalar_from_literal(p, context, path="%s[%d]" % (path, i))
        for i, p in enumerate(parts)
    ]
    if all(c.is_zero() for c in coords):
        raise SchemaError(path, "all three entries are zero")
    return coords


def point_from_literal(text, context, path="point"):
    return ProjPoint(context, vector_from_literal(text, context, path))


def line_from_literal(text, context, path="line"):
    return ProjLine(context, vector_from_literal(text, context, path))

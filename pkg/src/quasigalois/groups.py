"""Finite matrix groups generated by homologies, and their action on a line.

Closures are computed by breadth-first multiplication with deduplication up
to scalar (projective equality); a finite set of invertible matrices closed
under multiplication is automatically a group.  When every generator
preserves a line, the restriction to that line in the coordinates of its two
canonical spanning points is a 2x2 matrix, well defined up to scalar; the
induced map is a group homomorphism, and its kernel size, image size and the
image's element-order histogram identify the quotient (for example the
histograms {1:1, 2:3, 3:8} and {1:1, 2:9, 3:8, 4:6} of the alternating and
symmetric groups on four letters).
"""

from __future__ import annotations

from .errors import ClosureCapExceeded, LineNotPreserved
from .geometry import ProjMatrix


def group_closure(generators, cap=1000):
    """All products of the generators (a finite group), BFS order, with cap."""
    if not generators:
        raise ValueError("need at least one generator")
    ctx = generators[0].context
    identity = ProjMatrix.identity(ctx)
    seen = {identity.canonical_key(): identity}
    queue = [identity]
    while queue:
        m = queue.pop(0)
        for g in generators:
            nm = g * m
            key = nm.canonical_key()
            if key not in seen:
                if len(seen) >= cap:
                    raise ClosureCapExceeded(cap)
                seen[key] = nm
                queue.append(nm)
    return list(seen.values())


def projective_order(matrix, cap=1000):
    """Smallest k >= 1 with matrix^k a scalar matrix."""
    ctx = matrix.context
    identity_key = ProjMatrix.identity(ctx).canonical_key()
    acc = matrix
    for k in range(1, cap + 1):
        if acc.canonical_key() == identity_key:
            return k
        acc = acc * matrix
    raise ValueError("projective order exceeds cap")


def order_histogram(group):
    """Map projective element order -> count over the whole group."""
    histogram = {}
    for m in group:
        o = projective_order(m, cap=len(group))
        histogram[o] = histogram.get(o, 0) + 1
    return histogram


def _raw_apply(matrix, coords):
    r = matrix.rows
    return [
        r[i][0] * coords[0] + r[i][1] * coords[1] + r[i][2] * coords[2]
        for i in range(3)
    ]


def _line_coordinates(line, vec):
    """Coordinates of a raw vector in the spanning-point basis of the line."""
    s1, s2 = line.spanning_points()
    j = next(i for i, c in enumerate(line.coeffs) if not c.is_zero())
    k1, k2 = [i for i in range(3) if i != j]
    s, t = vec[k1], vec[k2]
    if vec[j] != s * s1.coords[j] + t * s2.coords[j]:
        raise LineNotPreserved("the image vector does not lie on the line")
    return s, t


def restrict_to_line(matrix, line):
    """2x2 matrix of the action on the line's spanning-point coordinates.

    Raises LineNotPreserved when the matrix does not map the line to itself.
    The result is well defined up to the scalar class of `matrix`.
    """
    s1, s2 = line.spanning_points()
    a, b = _line_coordinates(line, _raw_apply(matrix, s1.coords))
    c, d = _line_coordinates(line, _raw_apply(matrix, s2.coords))
    # M(s*S1 + t*S2) = (a*s + c*t) S1 + (b*s + d*t) S2
    return ((a, c), (b, d))


def _canon2(m2):
    flat = (m2[0][0], m2[0][1], m2[1][0], m2[1][1])
    pivot = next((c for c in flat if not c.is_zero()), None)
    if pivot is None:
        raise ValueError("zero 2x2 matrix")
    inv = pivot.inverse()
    return tuple((c * inv).key() for c in flat)


def _mul2(a, b):
    return (
        (
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ),
        (
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ),
    )


def _is_scalar2(m2):
    return (
        m2[0][1].is_zero() and m2[1][0].is_zero() and m2[0][0] == m2[1][1]
    )


def _proj_order2(m2, cap=128):
    acc = m2
    for k in range(1, cap + 1):
        if _is_scalar2(acc):
            return k
        acc = _mul2(acc, m2)
    raise ValueError("projective order exceeds cap")


class LineActionReport:
    """Kernel size, image size and image order histogram of a line action."""

    __slots__ = ("group_order", "kernel_order", "image_order", "histogram")

    def __init__(self, group_order, kernel_order, image_order, histogram):
        self.group_order = group_order
        self.kernel_order = kernel_order
        self.image_order = image_order
        self.histogram = histogram

    def __repr__(self):
        return "LineActionReport(|G|=%d, kernel %d, image %d, histogram %r)" % (
            self.group_order,
            self.kernel_order,
            self.image_order,
            self.histogram,
        )


def line_action_analysis(group, line):
    """Restrict a matrix group to an invariant line and describe the quotient.

    Returns a LineActionReport; asserts |G| = |kernel| * |image| as a
    homomorphism sanity check.
    """
    images = {}
    kernel = 0
    for m in group:
        r2 = restrict_to_line(m, line)
        key = _canon2(r2)
        if key not in images:
            images[key] = r2
        if _is_scalar2(r2):
            kernel += 1
    assert kernel * len(images) == len(group), (
        "line action must be a homomorphism: |G| = |kernel| * |image|"
    )
    histogram = {}
    for r2 in images.values():
        o = _proj_order2(r2)
        histogram[o] = histogram.get(o, 0) + 1
    return LineActionReport(len(group), kernel, len(images), histogram)

"""Exact smoothness decisions over the algebraic closure."""

import random

import pytest

from quasigalois import (
    FieldContext,
    HomoPoly,
    NotSmooth,
    PlaneCurve,
    ProjMatrix,
    is_smooth,
)
from quasigalois import catalog


def test_all_catalog_forms_are_smooth(instances):
    for name, inst in instances.items():
        assert is_smooth(inst.curve.form), name


def test_known_singular_quartics():
    ctx = FieldContext(4)
    # cuspidal: X^3 Z + Y^4 has a singular point at (0 : 0 : 1)
    cusp = HomoPoly.from_int_terms(ctx, 4, {(3, 0, 1): 1, (0, 4, 0): 1})
    assert not is_smooth(cusp)
    # union of four lines through coordinate vertices
    lines = HomoPoly.from_int_terms(ctx, 4, {(2, 2, 0): 1, (0, 2, 2): 1})
    assert not is_smooth(lines)
    # binary quartic in X, Y only: singular at (0 : 0 : 1)
    binary = HomoPoly.from_int_terms(ctx, 4, {(4, 0, 0): 1, (0, 4, 0): 1})
    assert not is_smooth(binary)


def test_parameter_boundaries_are_singular():
    with pytest.raises(NotSmooth):
        catalog.make("quartic_xy", a=2)
    with pytest.raises(NotSmooth):
        catalog.make("quartic_xy", a=-2)
    with pytest.raises(NotSmooth):
        catalog.make("quartic_symmetric", a=-1)
    with pytest.raises(NotSmooth):
        catalog.make("quartic_symmetric", a=2)
    with pytest.raises(NotSmooth):
        catalog.make("quartic_symmetric", a=-2)


def test_singularity_can_be_invisible_over_the_base_field():
    # X^4 + 2 X^2 Y^2 + Y^4 + ... style: nodes only at conjugate points
    ctx = FieldContext(4)
    # (X^2 + Y^2)^2 + Z^4 is singular exactly at (1 : ±i : 0)
    form = HomoPoly.from_int_terms(
        ctx, 4, {(4, 0, 0): 1, (2, 2, 0): 2, (0, 4, 0): 1, (0, 0, 4): 1}
    )
    assert not is_smooth(form)


def test_smoothness_is_invariant_under_linear_substitution():
    rng = random.Random(1291)
    ctx = FieldContext(4)
    smooth = HomoPoly.from_int_terms(
        ctx, 4, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    )
    singular = HomoPoly.from_int_terms(ctx, 4, {(3, 0, 1): 1, (0, 4, 0): 1})
    for _ in range(8):
        while True:
            m = ProjMatrix.from_ints(
                ctx, [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            )
            if not m.det().is_zero():
                break
        assert is_smooth(smooth.pullback(m))
        assert not is_smooth(singular.pullback(m))


def test_plane_curve_gate_matches_is_smooth():
    ctx = FieldContext(4)
    cusp = HomoPoly.from_int_terms(ctx, 4, {(3, 0, 1): 1, (0, 4, 0): 1})
    with pytest.raises(NotSmooth):
        PlaneCurve(cusp)
    good = HomoPoly.from_int_terms(
        ctx, 4, {(3, 0, 1): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    )
    curve = PlaneCurve(good)
    assert curve.form == good
    assert curve.degree == 4


def test_sextic_boundary_values():
    # the one-parameter sextic family degenerates at a = 0 but stays smooth
    # at other small integers
    for a in (1, -1, 3, 7):
        inst = catalog.make("sextic_delta4", a=a)
        assert is_smooth(inst.curve.form)

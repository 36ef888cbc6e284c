"""Exact cyclotomic field arithmetic: axioms, roots of unity, extensions."""

import random
from fractions import Fraction

import pytest

from quasigalois import (
    FieldContext,
    RootOfUnityUnavailable,
    ZeroDivisorEncountered,
    cyclotomic_polynomial,
    euler_phi,
    multiplicative_order,
)

CONDUCTORS = (3, 4, 5, 8, 12, 24)


def random_element(ctx, rng):
    coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(ctx.dim)]
    return ctx.from_coords(coords)


def test_field_axioms_randomized():
    rng = random.Random(20260814)
    for conductor in CONDUCTORS:
        ctx = FieldContext(conductor)
        for _ in range(40):
            a = random_element(ctx, rng)
            b = random_element(ctx, rng)
            c = random_element(ctx, rng)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a - a).is_zero()
            assert a + ctx.zero() == a
            assert a * ctx.one() == a
            if not a.is_zero():
                assert (a * a.inverse()).is_one()
                assert a / a == ctx.one()


def test_zeta_has_multiplicative_order_equal_to_conductor():
    for conductor in CONDUCTORS:
        ctx = FieldContext(conductor)
        z = ctx.zeta()
        assert multiplicative_order(z) == conductor
        assert z ** conductor == ctx.one()
        assert ctx.dim == euler_phi(conductor)


def test_cyclotomic_polynomial_known_values():
    assert tuple(cyclotomic_polynomial(1)) == (-1, 1)
    assert tuple(cyclotomic_polynomial(3)) == (1, 1, 1)
    assert tuple(cyclotomic_polynomial(4)) == (1, 0, 1)
    assert tuple(cyclotomic_polynomial(8)) == (1, 0, 0, 0, 1)
    assert tuple(cyclotomic_polynomial(12)) == (1, 0, -1, 0, 1)


def test_euler_phi_multiplicativity():
    rng = random.Random(7)
    known = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 8: 4, 12: 4, 24: 8, 28: 12}
    for n, value in known.items():
        assert euler_phi(n) == value
    for _ in range(50):
        a = rng.choice([3, 4, 5, 7, 8, 9, 11])
        b = rng.choice([13, 16, 17, 19, 23, 25])
        import math

        if math.gcd(a, b) == 1:
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_root_of_unity_within_conductor():
    ctx = FieldContext(8)
    i = ctx.root_of_unity(4)
    assert i == ctx.zeta() ** 2
    assert multiplicative_order(i) == 4
    assert multiplicative_order(ctx.root_of_unity(2)) == 2


def test_root_of_unity_odd_conductor_supplies_even_orders():
    # Q(zeta_3) contains -zeta_3, a primitive 6th root of unity.
    ctx = FieldContext(3)
    r = ctx.root_of_unity(6)
    assert multiplicative_order(r) == 6
    assert r ** 6 == ctx.one()
    assert ctx.root_of_unity_order_available(6)


def test_root_of_unity_unavailable_raises():
    ctx = FieldContext(3)
    assert not ctx.root_of_unity_order_available(4)
    with pytest.raises(RootOfUnityUnavailable):
        ctx.root_of_unity(4)
    assert ctx.suggested_conductor(4) % 4 == 0


def test_rational_detection_and_round_trip():
    ctx = FieldContext(12)
    q = Fraction(-7, 3)
    e = ctx.from_rational(q)
    assert e.is_rational()
    assert e.as_rational() == q
    assert not ctx.zeta().is_rational()
    k = ctx.from_int(5)
    assert k.as_rational() == 5


def test_from_coords_round_trip_randomized():
    rng = random.Random(99)
    for conductor in CONDUCTORS:
        ctx = FieldContext(conductor)
        for _ in range(20):
            e = random_element(ctx, rng)
            assert ctx.from_coords(e.coords()) == e


def test_power_matches_repeated_multiplication():
    rng = random.Random(4242)
    ctx = FieldContext(5)
    for _ in range(25):
        a = random_element(ctx, rng)
        acc = ctx.one()
        for k in range(6):
            assert a ** k == acc
            acc = acc * a
        if not a.is_zero():
            assert a ** -1 == a.inverse()
            assert a ** -2 == (a * a).inverse()


def test_extension_sqrt_generator_squares_to_tag():
    ctx = FieldContext(5)
    lam = ctx.one() - ctx.zeta() - ctx.zeta() ** 4
    ext = ctx.extend_sqrt(lam)
    g = ext.sqrt_generator()
    assert g * g == ext.embed(lam)
    assert ext.lambda_sq == lam
    u, v = g.parts()
    assert u.is_zero() and v.is_one()


def test_extension_parts_reassemble():
    rng = random.Random(11)
    ctx = FieldContext(8)
    ext = ctx.extend_sqrt(ctx.from_int(-2))
    g = ext.sqrt_generator()
    for _ in range(30):
        u = random_element(ctx, rng)
        v = random_element(ctx, rng)
        e = ext.from_parts(u, v)
        assert e == ext.embed(u) + ext.embed(v) * g
        pu, pv = e.parts()
        assert pu == u and pv == v


def test_extension_embedding_is_a_ring_homomorphism():
    rng = random.Random(55)
    ctx = FieldContext(5)
    ext = ctx.extend_sqrt(ctx.from_int(2))
    for _ in range(30):
        a = random_element(ctx, rng)
        b = random_element(ctx, rng)
        assert ext.embed(a + b) == ext.embed(a) + ext.embed(b)
        assert ext.embed(a * b) == ext.embed(a) * ext.embed(b)


def test_square_tag_extension_has_zero_divisors():
    # Adjoining a square root of an existing square splits the ring,
    # so some nonzero elements cannot be inverted.
    ctx = FieldContext(4)
    ext = ctx.extend_sqrt(ctx.from_int(4))
    g = ext.sqrt_generator()
    two = ext.from_int(2)
    assert ((g - two) * (g + two)).is_zero()
    assert not (g - two).is_zero()
    with pytest.raises(ZeroDivisorEncountered):
        (g - two).inverse()


def test_context_compatibility_and_signature():
    a = FieldContext(8)
    b = FieldContext(8)
    c = FieldContext(12)
    assert a == b and a.compatible(b)
    assert a != c and not a.compatible(c)
    ext = a.extend_sqrt(a.from_int(-2))
    assert not a.compatible(ext)
    assert ext.signature[0] == 8
    assert a.signature == b.signature
    assert a.signature != ext.signature


def test_multiplicative_order_returns_none_for_non_roots():
    ctx = FieldContext(4)
    assert multiplicative_order(ctx.from_int(2), cap=64) is None
    assert multiplicative_order(ctx.zero(), cap=64) is None

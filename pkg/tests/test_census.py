"""Orbit-closed censuses: tallies, pairs, triples, normalization."""

import pytest

from quasigalois import (
    ClosureCapExceeded,
    FieldContext,
    HomoPoly,
    NotAGPair,
    PlaneCurve,
    ProjPoint,
    SamePoint,
    census,
    classify_point,
    find_triples,
    has_pair_normal_support,
    is_mutual_pair,
    make_pair,
    normalize_pair,
    orbit_expand,
)
from quasigalois import catalog
from quasigalois.serialize import sorted_records


def points(ctx, *vecs):
    return [ProjPoint.from_ints(ctx, v) for v in vecs]


def test_hessian_census_from_four_seeds_is_certified():
    inst = catalog.make("hessian_sextic")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
    report = census(inst.curve, seeds)
    assert report.delta_prime == {2: 0, 3: 12, 6: 0}
    assert report.certification == "certified"
    assert report.certification_bound == 12
    assert report.certification_attained == 12


def test_mixed_sextic_census_from_four_seeds():
    inst = catalog.make("sextic_delta8")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1))
    report = census(inst.curve, seeds)
    assert report.delta_prime == {2: 0, 3: 8, 6: 1}
    e3 = ProjPoint.from_ints(ctx, (0, 0, 1))
    assert report.records[e3].order == 6
    z_axis = [r for r in report.records.values() if r.order == 3]
    assert len(z_axis) == 8
    assert all(r.point.coords[2].is_zero() for r in z_axis)


def test_fermat_census_from_five_seeds():
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))
    report = census(inst.curve, seeds)
    assert report.delta_prime == {2: 12, 4: 3}
    assert len(report.records) == 15
    assert len(report.quasi_galois_points()) == 15
    assert all(r.is_quasi_galois for r in report.quasi_galois_points())


def test_census_is_independent_of_seed_order():
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))
    a = census(inst.curve, seeds)
    b = census(inst.curve, list(reversed(seeds)))
    assert a.delta_prime == b.delta_prime
    assert a.delta == b.delta
    key_a = [(r.point.key(), r.order) for r in sorted_records(a)]
    key_b = [(r.point.key(), r.order) for r in sorted_records(b)]
    assert key_a == key_b
    assert len(a.pairs) == len(b.pairs)
    assert len(a.triples) == len(b.triples)


def test_orbit_expand_closes_under_generators():
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))
    expanded = orbit_expand(inst.curve.form, seeds)
    assert len(expanded) == 15
    for seed in seeds:
        assert seed in expanded
    # every generator maps the recorded point set into itself
    pts = set(expanded)
    for rec in expanded.values():
        if rec.generator is None:
            continue
        for p in pts:
            assert rec.generator.matrix.apply_to_point(p) in pts


def test_pair_and_triple_counts_on_full_entries(evaluations):
    expected = {
        "hessian_sextic": (21, 48, 4),
        "sextic_delta8": (21, 30, 10),
        "sextic_delta4": (5, 4, 0),
        "fermat_quartic": (15, 21, 7),
        "quartic_symmetric": (9, 12, 4),
        "quartic_xy": (7, 9, 3),
        "quartic_5family": (5, 6, 2),
        "quartic_klein": (21, 42, 14),
    }
    for name, (n_points, n_pairs, n_triples) in expected.items():
        report = evaluations[name].report
        assert len(report.records) == n_points, name
        assert len(report.pairs) == n_pairs, name
        assert len(report.triples) == n_triples, name


def test_triples_arise_from_pairwise_links(evaluations):
    report = evaluations["hessian_sextic"].report
    assert find_triples(report.pairs) == report.triples
    pair_keys = {frozenset((p.rec1.point, p.rec2.point)) for p in report.pairs}
    for triple in report.triples:
        a, b, c = triple
        assert frozenset((a, b)) in pair_keys
        assert frozenset((b, c)) in pair_keys
        assert frozenset((a, c)) in pair_keys


def test_mutual_pair_recognition():
    inst = catalog.make("hessian_sextic")
    form = inst.curve.form
    ctx = inst.context
    e1, e2 = points(ctx, (1, 0, 0), (0, 1, 0))
    r1 = classify_point(form, e1)
    r2 = classify_point(form, e2)
    assert is_mutual_pair(r1, r2)
    pair = make_pair(r1, r2)
    assert pair.n == 3
    assert pair.third == ProjPoint.from_ints(ctx, (0, 0, 1))
    assert set(pair.points()) == {e1, e2}


def test_make_pair_rejects_identical_and_unlinked_points():
    fermat = catalog.make("fermat_quartic")
    form = fermat.curve.form
    ctx = fermat.context
    e1 = classify_point(form, ProjPoint.from_ints(ctx, (1, 0, 0)))
    e1_again = classify_point(form, ProjPoint.from_ints(ctx, (1, 0, 0)))
    diag = classify_point(form, ProjPoint.from_ints(ctx, (1, 1, 0)))
    with pytest.raises(SamePoint):
        make_pair(e1, e1_again)
    assert not is_mutual_pair(e1, diag)
    with pytest.raises(NotAGPair):
        make_pair(e1, diag)


def test_normalize_pair_round_trip_on_vertex_pairs():
    hess = catalog.make("hessian_sextic")
    form = hess.curve.form
    ctx = hess.context
    r1 = classify_point(form, ProjPoint.from_ints(ctx, (1, 0, 0)))
    r2 = classify_point(form, ProjPoint.from_ints(ctx, (0, 1, 0)))
    base_change, normalized, n = normalize_pair(form, r1, r2)
    assert n == 3
    assert normalized == form.pullback(base_change)
    assert has_pair_normal_support(normalized, 3)

    fermat = catalog.make("fermat_quartic")
    fform = fermat.curve.form
    fctx = fermat.context
    s1 = classify_point(fform, ProjPoint.from_ints(fctx, (1, 1, 0)))
    s2 = classify_point(fform, ProjPoint.from_ints(fctx, (1, -1, 0)))
    assert s1.order == 2 and s2.order == 2
    base_change, normalized, n = normalize_pair(fform, s1, s2)
    assert n == 2
    assert has_pair_normal_support(normalized, 2)


def test_pair_normal_support_rejections():
    ctx = FieldContext(4)
    fermat = HomoPoly.from_int_terms(
        ctx, 4, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    )
    # wrong half-degree
    assert not has_pair_normal_support(fermat, 3)
    assert has_pair_normal_support(fermat, 2)
    # stray monomial outside the six allowed exponent patterns
    stray = fermat + HomoPoly.from_int_terms(ctx, 4, {(3, 1, 0): 1})
    assert not has_pair_normal_support(stray, 2)
    # vanishing pure power
    no_pure = HomoPoly.from_int_terms(
        ctx, 4, {(4, 0, 0): 1, (0, 4, 0): 1, (2, 0, 2): 1}
    )
    assert not has_pair_normal_support(no_pure, 2)


def test_census_honors_the_point_cap():
    inst = catalog.make("fermat_quartic")
    ctx = inst.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))
    with pytest.raises(ClosureCapExceeded):
        census(inst.curve, seeds, cap=3)


def test_certification_levels():
    hess = catalog.make("hessian_sextic")
    ctx = hess.context
    seeds = points(ctx, (1, 0, 0), (0, 1, 0))
    partial = census(hess.curve, seeds)
    # a partial seed set cannot overshoot; it lands on a tabled value
    assert partial.certification in ("certified", "theory_table_only")

    c20 = FieldContext(20)
    quintic = PlaneCurve(
        HomoPoly.from_int_terms(c20, 5, {(5, 0, 0): 1, (0, 5, 0): 1, (0, 0, 5): 1})
    )
    report = census(quintic, points(c20, (1, 0, 0), (0, 1, 0)))
    assert report.certification == "bound_gap"
    assert report.certification_bound is None
    assert report.delta_prime == {5: 2}


def test_inner_points_are_tallied_separately():
    # delta counts points on the curve; the catalog entries have none,
    # but an explicitly constructed inner point shows up in delta.
    ctx = FieldContext(12)
    form = HomoPoly.from_int_terms(
        ctx, 4, {(3, 0, 1): 1, (0, 4, 0): 1, (0, 0, 4): 1}
    )
    curve = PlaneCurve(form)
    p = ProjPoint.from_ints(ctx, (1, 0, 0))
    report = census(curve, [p])
    assert report.records[p].kind == "inner"
    assert report.delta.get(3, 0) >= 1
    assert report.delta_prime.get(3, 0) == 0 or p not in {
        r.point for r in report.records.values() if r.kind == "outer"
    }

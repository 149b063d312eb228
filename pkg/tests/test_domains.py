"""Domain model: validation flags, canonicalization, volume, wire format."""

from fractions import Fraction as F

import pytest

import symcap.domains as dom


def test_validate_examples():
    r = dom.validate(dom.ball(1))
    assert r.is_convex_toric and r.is_concave_toric
    assert r.normalized_omega.vertices == ((F(0), F(0)), (F(1), F(0)), (F(0), F(1)))

    r = dom.validate(dom.polydisk(1, 1))
    assert r.is_convex_toric and not r.is_concave_toric

    pent = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    r = dom.validate(pent)
    assert r.is_convex_toric and not r.is_concave_toric


def test_every_ellipsoid_is_both_kinds():
    for a, b in [(1, 2), (F(3, 2), 1), (3, F(7, 5))]:
        r = dom.validate(dom.ellipsoid(a, b))
        assert r.is_convex_toric and r.is_concave_toric
        assert r.normalized_omega.vertices == (
            (F(0), F(0)), (F(a), F(0)), (F(0), F(b)))


def test_concave_polygon_flags():
    # staircase region under a convex graph: concave toric, not convex toric
    c = dom.concave_toric([(0, 0), (3, 0), (1, 1), (0, 3)])
    r = dom.validate(c)
    assert r.is_concave_toric and not r.is_convex_toric


def test_convex_toric_rejects_reflex_polygon():
    with pytest.raises(ValueError):
        dom.convex_toric([(0, 0), (3, 0), (1, 1), (0, 3)])
    with pytest.raises(ValueError):
        dom.concave_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])


def test_reflection_condition_is_stronger_than_convexity():
    # convex as a polygon, but the axis reflection has a reentrant corner:
    # the y-axis vertex is not the topmost point
    with pytest.raises(ValueError):
        dom.convex_toric([(0, 0), (2, 0), (1, 2), (0, 1)])


def test_validate_idempotent():
    pent = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    r1 = dom.validate(pent)
    r2 = dom.validate(dom.ConvexToric(r1.normalized_omega))
    assert r1 == r2


def test_canonical_omega_accepts_any_rotation_and_orientation():
    a = dom.canonical_omega([(2, 0), (0, 2), (0, 0)])  # rotated, cw
    b = dom.canonical_omega([(0, 0), (2, 0), (0, 2)])
    assert a.vertices == b.vertices


def test_nonpositive_parameters_rejected():
    for bad in [0, -1, F(-1, 2)]:
        with pytest.raises(ValueError):
            dom.ball(bad)
        with pytest.raises(ValueError):
            dom.ellipsoid(1, bad)
        with pytest.raises(ValueError):
            dom.polydisk(bad, 1)


def test_volume_examples():
    assert dom.volume(dom.ball(1)) == F(1, 2)
    assert dom.volume(dom.ellipsoid(1, 2)) == 1
    assert dom.volume(dom.polydisk(1, 2)) == 2
    assert dom.volume(dom.cp2(1)) == F(1, 2)
    assert dom.volume(dom.s2xs2(1, 2)) == 2
    pent = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    assert dom.volume(pent) == F(7, 2)


def test_union_volume_is_sum():
    u = dom.disjoint_union(dom.ball(1), dom.ellipsoid(1, 2), dom.polydisk(1, 1))
    assert dom.volume(u) == F(1, 2) + 1 + 1


def test_union_flattens_and_sorts():
    u1 = dom.disjoint_union(dom.ball(2), dom.disjoint_union(dom.ball(1)))
    u2 = dom.disjoint_union(dom.ball(1), dom.ball(2))
    assert u1 == u2


def test_union_rejects_closed_parts():
    with pytest.raises(ValueError):
        dom.disjoint_union(dom.ball(1), dom.cp2(1))
    with pytest.raises(ValueError):
        dom.disjoint_union()


def test_scale_domain_scales_moment_data():
    assert dom.scale_domain(dom.ball(1), 2) == dom.Ball(F(2))
    u = dom.disjoint_union(dom.ball(1), dom.polydisk(1, 2))
    su = dom.scale_domain(u, F(3, 2))
    assert dom.volume(su) == F(9, 4) * dom.volume(u)
    pent = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    sp = dom.scale_domain(pent, 3)
    assert dom.volume(sp) == 9 * dom.volume(pent)
    assert dom.validate(sp).is_convex_toric


def test_wire_format_round_trip():
    cases = [
        dom.ball(1),
        dom.ellipsoid(1, F(3, 2)),
        dom.polydisk(1, 2),
        dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]),
        dom.concave_toric([(0, 0), (3, 0), (1, 1), (0, 3)]),
        dom.disjoint_union(dom.ball(1), dom.ball(1)),
        dom.cp2(1),
        dom.s2xs2(1, 1),
    ]
    for d in cases:
        assert dom.domain_from_json(dom.domain_to_json(d)) == d


def test_wire_format_diagnostics():
    with pytest.raises(ValueError, match="'type'"):
        dom.domain_from_json({"a": "1"})
    with pytest.raises(ValueError, match="'a'"):
        dom.domain_from_json({"type": "ball"})
    with pytest.raises(ValueError, match="vertices"):
        dom.domain_from_json({"type": "convex_toric", "vertices": [["0", "0"]]})
    with pytest.raises(ValueError, match="unknown domain type"):
        dom.domain_from_json({"type": "torus"})
    with pytest.raises(ValueError):
        dom.domain_from_json({"type": "ball", "a": 1.25})


def test_wire_format_accepts_integer_and_string_rationals():
    d = dom.domain_from_json({"type": "ellipsoid", "a": 1, "b": "3/2"})
    assert d == dom.Ellipsoid(F(1), F(3, 2))


def test_domain_key_is_stable_and_canonical():
    u1 = dom.disjoint_union(dom.ball(2), dom.ball(1))
    u2 = dom.disjoint_union(dom.ball(1), dom.ball(2))
    assert dom.domain_key(u1) == dom.domain_key(u2)
    assert "#" not in dom.domain_key(u1)  # reserved for memo keys


def test_upper_boundary_runs_down_from_y_axis():
    pent = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    chain = dom.upper_boundary(pent)
    assert chain[0] == (F(0), F(2)) and chain[-1] == (F(2), F(0))
    assert [tuple(map(int, p)) for p in chain] == [(0, 2), (1, 2), (2, 1), (2, 0)]

"""Comb construction and polygon containment under translation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gadgetbench.combs import CombParams, build_comb_pair, comb_polygon, default_fattening, fatten
from gadgetbench.containment import polygon_contains_at, solve_cpct, solve_polycont
from gadgetbench.errors import InvalidFattening
from gadgetbench.geometry import (
    ConvexPolygon,
    Interval,
    IntervalSet,
    Point2,
    Side,
    convex_hull,
    point_in_polygon,
    pt,
)
from gadgetbench.instances import SegContPntInstance
from gadgetbench.linear import solve_segcontpnt
from gadgetbench.rationals import rat


def iv(lo, hi) -> Interval:
    return Interval(rat(lo), rat(hi))


# ---------------------------------------------------------------------- combs

def test_comb_polygon_two_teeth():
    poly = comb_polygon(IntervalSet([iv(0, 1), iv(2, 3)]))
    ys = {v.y for v in poly.vertices}
    assert ys == {-1, 0, 1}
    assert len(poly.vertices) == 8
    assert poly.bbox() == (0, 3, -1, 1)  # base spans I(S), height exactly 2
    assert poly.area2() == 2 * (3 + 1 + 1)


def test_comb_polygon_single_tooth_is_rectangle():
    poly = comb_polygon(IntervalSet([iv(2, 5)]))
    assert len(poly.vertices) == 4
    assert poly.bbox() == (2, 5, -1, 1)


def test_comb_height_is_two():
    # shared height is what forces witness shifts to stay horizontal
    for teeth in ([iv(0, 1)], [iv(0, 1), iv(4, 9)], [iv(0, "1/4"), iv(1, 2), iv(3, "7/2")]):
        poly = comb_polygon(IntervalSet(teeth))
        _, _, y0, y1 = poly.bbox()
        assert (y0, y1) == (-1, 1)


def test_comb_polygon_rejects_point_teeth():
    with pytest.raises(InvalidFattening):
        comb_polygon(IntervalSet([iv(0, 0), iv(2, 3)]))


def test_fatten_rejects_width_reaching_half_gap():
    inst = SegContPntInstance((rat(0), rat(1)), IntervalSet([iv(0, 0), iv(1, 1)]))
    with pytest.raises(InvalidFattening):
        fatten(inst, CombParams(Fraction(1, 2)))
    fat_p, fat_q = fatten(inst, CombParams(Fraction(1, 4)))
    assert [(v.lo, v.hi) for v in fat_p] == [(0, Fraction(1, 4)), (1, Fraction(5, 4))]
    assert [(v.lo, v.hi) for v in fat_q] == [(0, Fraction(1, 4)), (1, Fraction(5, 4))]


def test_default_fattening_quarter_of_min_gap():
    inst = SegContPntInstance((rat(0), rat(2)), IntervalSet([iv(0, 1), iv(2, 3)]))
    assert default_fattening(inst).width == Fraction(1, 4)
    lone = SegContPntInstance((rat(0),), IntervalSet([iv(0, 5)]))
    assert default_fattening(lone).width == Fraction(1, 4)


def test_build_comb_pair_preserves_answer_yes_and_no():
    yes = SegContPntInstance((rat(0), rat(2)), IntervalSet([iv(0, 1), iv(2, 3)]))
    pair = build_comb_pair(yes)
    w = solve_polycont(pair.inner, pair.outer)
    assert w is not None and w.t.y == 0
    assert polygon_contains_at(pair.inner, w.t, pair.outer)

    no = SegContPntInstance((rat(0), rat(2)), IntervalSet([iv(0, 0), iv(3, 3)]))
    pair = build_comb_pair(no)
    assert solve_polycont(pair.inner, pair.outer) is None


# ---------------------------------------------------------- generic polycont

def test_polygon_contains_at_examples():
    inner = ConvexPolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    outer = ConvexPolygon([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
    assert polygon_contains_at(inner, pt(1, 1), outer)
    assert polygon_contains_at(inner, pt(3, 3), outer)  # boundary contact allowed
    assert not polygon_contains_at(inner, pt(4, 0), outer)


def test_solve_polycont_needs_contact_translation():
    # inner square fits only into the lower-left cell of an L shaped outer
    inner = ConvexPolygon([pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)])
    outer = comb_polygon(IntervalSet([iv(0, 2), iv(3, 5)]))
    w = solve_polycont(inner, outer)
    assert w is not None
    assert polygon_contains_at(inner, w.t, outer)


def test_solve_polycont_no_when_too_wide():
    inner = ConvexPolygon([pt(0, 0), pt(3, 0), pt(3, 1), pt(0, 1)])
    outer = ConvexPolygon([pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)])
    assert solve_polycont(inner, outer) is None


# ----------------------------------------------------- segcontpnt equivalence

def random_segcont(rng: random.Random) -> SegContPntInstance:
    m = rng.randint(1, 3)
    ivs = []
    x = Fraction(0)
    for _ in range(m):
        lo = x + Fraction(rng.randint(2, 5), 2)
        hi = lo + Fraction(rng.randint(0, 4), 2)
        ivs.append(Interval(lo, hi))
        x = hi
    k = rng.randint(1, 3)
    pts = tuple(Fraction(rng.randint(0, 14), 2) for _ in range(k))
    return SegContPntInstance(tuple(set(pts)), IntervalSet(ivs))


def test_comb_reduction_matches_one_dim_solver():
    rng = random.Random(20240817)
    yes = no = 0
    for _ in range(60):
        inst = random_segcont(rng)
        pair = build_comb_pair(inst)
        w2 = solve_polycont(pair.inner, pair.outer)
        w1 = solve_segcontpnt(inst)
        assert (w1 is None) == (w2 is None)
        if w2 is not None:
            yes += 1
            assert w2.t.y == 0  # equal heights pin the vertical shift
            assert polygon_contains_at(pair.inner, w2.t, pair.outer)
        else:
            no += 1
    assert yes >= 5 and no >= 5  # the family must exercise both answers


# ----------------------------------------------------------------- convex cpct

def random_convex(rng: random.Random, n_max: int, scale: int) -> ConvexPolygon:
    while True:
        pts = [
            Point2(Fraction(rng.randint(0, 4 * scale), 4), Fraction(rng.randint(0, 4 * scale), 4))
            for _ in range(rng.randint(3, n_max))
        ]
        try:
            return convex_hull(pts)
        except Exception:
            continue


def test_cpct_agrees_with_generic_solver():
    rng = random.Random(99)
    agree_yes = agree_no = 0
    for _ in range(80):
        inner = random_convex(rng, 6, 3)
        outer = random_convex(rng, 8, 5)
        wc = solve_cpct(inner, outer)
        wg = solve_polycont(inner, outer)
        assert (wc is None) == (wg is None)
        if wc is not None:
            agree_yes += 1
            assert polygon_contains_at(inner, wc.t, outer)
        else:
            agree_no += 1
    assert agree_yes >= 10 and agree_no >= 10


def test_cpct_boundary_tight_fit():
    inner = ConvexPolygon([pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)])
    outer = ConvexPolygon([pt(10, 10), pt(12, 10), pt(12, 12), pt(10, 12)])
    w = solve_cpct(inner, outer)
    assert w is not None and w.t == pt(10, 10)

    too_big = ConvexPolygon([pt(0, 0), pt(3, 0), pt(3, 3), pt(0, 3)])
    assert solve_cpct(too_big, outer) is None

"""Circle-arc wedges: containment under rotation and rigid motion."""

import math
from fractions import Fraction

import pytest

from gadgetbench.errors import DegenerateInput, PreconditionViolated, ProvenanceRequired
from gadgetbench.geometry import Interval, IntervalSet
from gadgetbench.instances import SegContPntInstance
from gadgetbench.linear import feasible_shifts, one_dim_slack, solve_segcontpnt
from gadgetbench.rationals import rat
from gadgetbench.rotation import (
    ArcSet,
    arc_sets,
    build_wedge,
    circle_map,
    flip_probe,
    pad_and_normalize,
    solve_rigid,
    solve_rotation,
    verify_rotation_angle,
    wedges_from_instance,
)


def iv(lo, hi) -> Interval:
    return Interval(rat(lo), rat(hi))


YES = SegContPntInstance((rat("1/2"),), IntervalSet([iv("1/4", "3/4")]))
NO = SegContPntInstance((rat(0), rat("1/2")), IntervalSet([iv(0, "1/8"), iv("3/4", "7/8")]))


# -------------------------------------------------------------------- padding

def test_pad_squeezes_core_and_adds_sentinels():
    padded = pad_and_normalize(YES)
    assert padded.points[0] == Fraction(1, 10) and padded.points[-1] == Fraction(9, 10)
    first, last = padded.intervals.intervals[0], padded.intervals.intervals[-1]
    assert (first.lo, first.hi) == (0, Fraction(1, 5))
    assert (last.lo, last.hi) == (Fraction(4, 5), 1)
    core = padded.points[1:-1]
    assert all(Fraction(9, 20) <= p <= Fraction(11, 20) for p in core)
    assert "pad_scale" in padded.provenance.meta


def test_pad_preserves_answer():
    for inst in (YES, NO):
        padded = pad_and_normalize(inst)
        assert (solve_segcontpnt(padded) is None) == (solve_segcontpnt(inst) is None)


def test_pad_handles_single_value_span():
    inst = SegContPntInstance((rat(7),), IntervalSet([iv(7, 7)]))
    padded = pad_and_normalize(inst)
    assert Fraction(1, 2) in padded.points
    assert solve_segcontpnt(padded) is not None


def test_pad_feasible_shifts_stay_within_sentinel_window():
    padded = pad_and_normalize(YES)
    for ivl in feasible_shifts(padded):
        assert -Fraction(1, 10) <= ivl.lo <= ivl.hi <= Fraction(1, 10)


# ----------------------------------------------------------------- arc wedges

def test_arc_sets_require_pad_provenance():
    with pytest.raises(PreconditionViolated):
        arc_sets(YES)


def test_circle_map_lands_on_unit_circle():
    for x in (0, Fraction(1, 2), 1, 50):
        sx, cx = circle_map(x)
        assert abs(sx * sx + cx * cx - 1.0) < 1e-15


def test_build_wedge_shape():
    inner_arcs, outer_arcs = arc_sets(pad_and_normalize(YES))
    wi = build_wedge(inner_arcs)
    wo = build_wedge(outer_arcs)
    assert wi.vertices[0] == (0.0, 0.0)
    # 3 point arcs -> origin + 3 vertices; 3 interval arcs -> origin + 9
    assert len(wi.vertices) == 4
    assert len(wo.vertices) == 10
    for w in (wi, wo):  # strictly convex, CCW, fan order
        v = w.vertices
        n = len(v)
        for i in range(n):
            ax, ay = v[i]
            bx, by = v[(i + 1) % n]
            cx, cy = v[(i + 2) % n]
            assert (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0


def test_build_wedge_tangent_point_covers_arc():
    # the mid vertex must reach past the chord so the arc stays inside
    arcs = ArcSet((iv(0, 1),), provenance=None)
    w = build_wedge(arcs)
    mid = w.vertices[2]
    assert math.hypot(*mid) == pytest.approx(1.0 / math.cos(0.005), rel=1e-12)


def test_build_wedge_rejects_collapsed_arcs():
    with pytest.raises(DegenerateInput):
        build_wedge(ArcSet((iv("1/2", "1/2"),)))


# -------------------------------------------------------------------- solvers

def test_rotation_yes_with_witness():
    wi, wo, padded = wedges_from_instance(YES)
    verdict = solve_rotation(wi, wo)
    assert verdict.is_yes
    assert verdict.margin > 0
    assert verify_rotation_angle(wi, wo, verdict.witness_angle)
    # the angle re-encodes a feasible one-dimensional shift
    u = 100.0 * verdict.witness_angle
    assert any(float(ivl.lo) - 1e-6 <= u <= float(ivl.hi) + 1e-6 for ivl in feasible_shifts(padded))


def test_rotation_no_with_negative_margin():
    wi, wo, padded = wedges_from_instance(NO)
    assert solve_segcontpnt(padded) is None
    verdict = solve_rotation(wi, wo)
    assert verdict.is_no
    assert verdict.margin < 0
    assert verdict.witness_angle is None


def test_rotation_uncertain_on_exact_fit():
    # zero slack: the only valid placement is a boundary contact
    tight = SegContPntInstance((rat(0), rat(1)), IntervalSet([iv(0, 0), iv(1, 1)]))
    wi, wo, padded = wedges_from_instance(tight)
    answer, slack = one_dim_slack(padded)
    assert answer and slack == 0
    assert solve_rotation(wi, wo).answer == "uncertain"


def test_verify_rotation_angle_rejects_bad_angle():
    wi, wo, _ = wedges_from_instance(YES)
    good = solve_rotation(wi, wo).witness_angle
    assert verify_rotation_angle(wi, wo, good)
    assert not verify_rotation_angle(wi, wo, good + 0.05)


def test_flip_probe_infeasible_for_padded_wedges():
    wi, wo, _ = wedges_from_instance(YES)
    probe = flip_probe(wi, wo)
    assert not probe.feasible
    assert probe.min_lift > 1.2 * probe.max_reach  # wide safety factor


def test_solve_rigid_matches_rotation_answer():
    for inst, want in ((YES, "yes"), (NO, "no")):
        wi, wo, _ = wedges_from_instance(inst)
        verdict = solve_rigid(wi, wo)
        assert verdict.answer == want
        assert verdict.flip is not None and not verdict.flip.feasible


def test_solve_rigid_demands_padded_provenance():
    arcs = ArcSet((iv(0, 1),))
    w = build_wedge(arcs)
    with pytest.raises(ProvenanceRequired):
        solve_rigid(w, w)


def test_rotation_answers_match_one_dim_over_family():
    # slack-filtered micro family, both answers represented
    import random

    rng = random.Random(4242)
    seen = {True: 0, False: 0}
    tried = 0
    while tried < 40:
        k = rng.randint(1, 2)
        pts = sorted({Fraction(rng.randint(0, 8), 4) for _ in range(k)})
        ivs = []
        x = Fraction(0)
        for _ in range(rng.randint(1, 2)):
            lo = x + Fraction(rng.randint(1, 4), 4)
            hi = lo + Fraction(rng.randint(1, 4), 4)
            ivs.append(Interval(lo, hi))
            x = hi + Fraction(1, 4)
        inst = SegContPntInstance(tuple(pts), IntervalSet(ivs))
        wi, wo, padded = wedges_from_instance(inst)
        answer, slack = one_dim_slack(padded)
        if slack < Fraction(1, 100):
            continue  # keep only instances the float sweep can separate
        tried += 1
        verdict = solve_rigid(wi, wo)
        assert verdict.answer == ("yes" if answer else "no")
        seen[answer] += 1
        if verdict.is_yes:
            assert verify_rotation_angle(wi, wo, verdict.witness_angle)
    assert min(seen.values()) >= 5

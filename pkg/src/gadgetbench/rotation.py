"""Wedge gadgets: interval containment recast as rotating one convex wedge
inside another.

``pad_and_normalize`` squeezes a SegContPnt instance into [0.45, 0.55] and
brackets it with sentinels: points 0.1 and 0.9 on the inner side, intervals
[0, 0.2] and [0.8, 1] on the outer side.  Sentinels pin any containing shift
to [-0.1, 0.1] and give the wedges their fixed widths (0.008 inner at the
wide end, 0.01 outer).

``circle_map`` sends preimage x to (sin(x/100), cos(x/100)); a 1-D shift v
becomes a clockwise rotation about the origin by v/100 radians.  A wedge is
the convex hull of the origin plus, per preimage interval, the two arc
endpoints and the intersection of the tangents there.  Tangent support lines
show each of those points is a hull vertex exactly in preimage order, so the
hull is built directly as a fan and a unit-circle point lies in the wedge iff
its preimage lies in the 1-D set.

This module computes in doubles.  Verdicts carry a margin (min signed
distance of rotated inner vertices to outer edges) and report UNCERTAIN when
the margin falls inside the tolerance.  Clearances shrink quadratically with
1-D slack (circle-versus-tangent-chord sagitta), so decidable instances need
slack well above sqrt(machine epsilon); the generated suites keep it >= 1e-2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, PreconditionViolated, ProvenanceRequired
from .geometry import Interval, IntervalSet
from .instances import Provenance, SegContPntInstance
from .rationals import rat

PAD_LO = Fraction(9, 20)
PAD_SPAN = Fraction(1, 10)


def pad_and_normalize(inst: SegContPntInstance) -> SegContPntInstance:
    """Affine squeeze into [0.45, 0.55] plus sentinel points/intervals.

    Answer-preserving both ways: the sentinels admit exactly the shifts in
    [-0.1, 0.1], under which the squeezed core can only land in the squeezed
    target (the sentinel intervals are out of its reach).
    """
    values = list(inst.points) + [e for iv in inst.intervals for e in (iv.lo, iv.hi)]
    lo, hi = min(values), max(values)
    span = hi - lo
    scale = PAD_SPAN / span if span else Fraction(0)

    def squeeze(x: Fraction) -> Fraction:
        return PAD_LO + (x - lo) * scale if span else Fraction(1, 2)

    points = [Fraction(1, 10)] + sorted({squeeze(p) for p in inst.points}) + [Fraction(9, 10)]
    intervals = [Interval(Fraction(0), Fraction(1, 5))]
    intervals += [Interval(squeeze(iv.lo), squeeze(iv.hi)) for iv in inst.intervals]
    intervals.append(Interval(Fraction(4, 5), Fraction(1)))
    prov = (inst.provenance or Provenance()).extend("pad", pad_scale=scale, pad_offset=PAD_LO - lo * scale)
    return SegContPntInstance(points=tuple(points), intervals=IntervalSet(intervals), provenance=prov)


@dataclass(frozen=True)
class ArcSet:
    """Disjoint preimage intervals in [0, 1]; points are zero-length arcs."""

    preimages: tuple[Interval, ...]
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        ivs = IntervalSet(self.preimages).intervals
        if not ivs:
            raise DegenerateInput("arc set needs at least one arc")
        if ivs[0].lo < 0 or ivs[-1].hi > 1:
            raise DegenerateInput("arc preimages must lie in [0, 1]")
        object.__setattr__(self, "preimages", ivs)

    @property
    def lo(self) -> Fraction:
        return self.preimages[0].lo

    @property
    def hi(self) -> Fraction:
        return self.preimages[-1].hi

    def width(self) -> Fraction:
        """End-to-end width measured in preimage length over 100 (radians)."""
        return (self.hi - self.lo) / 100


def arc_sets(padded: SegContPntInstance) -> tuple[ArcSet, ArcSet]:
    """Inner (point) and outer (interval) arc sets of a padded instance."""
    prov = padded.provenance
    if prov is None or "pad_scale" not in prov.meta:
        raise PreconditionViolated("arc_sets needs a pad_and_normalize output")
    inner = ArcSet(tuple(Interval(p, p) for p in padded.points), provenance=prov)
    outer = ArcSet(tuple(padded.intervals), provenance=prov)
    return inner, outer


def circle_map(x: Fraction | float | int) -> tuple[float, float]:
    """Preimage to unit circle: x -> (sin(x/100), cos(x/100))."""
    theta = float(x) / 100.0
    return math.sin(theta), math.cos(theta)


@dataclass(frozen=True)
class WedgePolygon:
    """Convex float polygon: origin first, then arc vertices in CCW order."""

    vertices: tuple[tuple[float, float], ...]
    arcs: ArcSet

    def edges(self) -> list[tuple[tuple[float, float], tuple[float, float]]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def build_wedge(arcs: ArcSet) -> WedgePolygon:
    """Hull of origin, arc endpoints, and per-interval tangent intersections.

    Vertices are emitted as a fan in decreasing preimage order, which is the
    CCW order for this geometry; a strict convexity check guards against
    arc sets too tight for double precision.
    """
    verts: list[tuple[float, float]] = [(0.0, 0.0)]
    for iv in reversed(arcs.preimages):
        th_lo = float(iv.lo) / 100.0
        th_hi = float(iv.hi) / 100.0
        if th_hi > th_lo:
            half = (th_hi - th_lo) / 2.0
            mid = (th_hi + th_lo) / 2.0
            sec = 1.0 / math.cos(half)
            verts.append((math.sin(th_hi), math.cos(th_hi)))
            verts.append((math.sin(mid) * sec, math.cos(mid) * sec))
            verts.append((math.sin(th_lo), math.cos(th_lo)))
        else:
            verts.append((math.sin(th_lo), math.cos(th_lo)))
    if len(verts) < 3:
        raise DegenerateInput("wedge needs at least two distinct arc points")
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        cx, cy = verts[(i + 2) % n]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) <= 0.0:
            raise DegenerateInput("arc set too tight for a strictly convex wedge in doubles")
    return WedgePolygon(vertices=tuple(verts), arcs=arcs)


@dataclass(frozen=True)
class FlipProbe:
    """Width-argument numbers for the turned-around placement.

    ``min_lift``: translation needed to fit the inner wedge's wide end into
    the outer cone after a half-turn; ``max_reach``: farthest extent of the
    outer wedge.  The flip is impossible when min_lift exceeds max_reach.
    """

    inner_width: float
    outer_width: float
    min_lift: float
    max_reach: float

    @property
    def feasible(self) -> bool:
        return self.min_lift <= self.max_reach


@dataclass(frozen=True)
class RotationVerdict:
    answer: str  # "yes" | "no" | "uncertain"
    witness_angle: float | None
    margin: float
    tol: float
    evaluations: int
    flip: FlipProbe | None = None

    @property
    def is_yes(self) -> bool:
        return self.answer == "yes"

    @property
    def is_no(self) -> bool:
        return self.answer == "no"


def _rotate_cw(p: tuple[float, float], angle: float) -> tuple[float, float]:
    c, s = math.cos(angle), math.sin(angle)
    x, y = p
    return x * c + y * s, -x * s + y * c


def _edge_data(outer: WedgePolygon) -> list[tuple[float, float, float, float, float]]:
    """Per edge: (ax, ay, dx, dy, inv_len) for signed inner distance."""
    out = []
    for (ax, ay), (bx, by) in outer.edges():
        dx, dy = bx - ax, by - ay
        out.append((ax, ay, dx, dy, 1.0 / math.hypot(dx, dy)))
    return out


def _margin_at(angle: float, inner: WedgePolygon, edges) -> float:
    """Min signed distance of rotated non-origin inner vertices to outer edges.

    The shared origin vertex is exact by construction (a vertex of both
    wedges, fixed by rotation) and is skipped so boundary contact there does
    not mask the real clearance.
    """
    c, s = math.cos(angle), math.sin(angle)
    best = math.inf
    for x, y in inner.vertices[1:]:
        px = x * c + y * s
        py = -x * s + y * c
        for ax, ay, dx, dy, inv in edges:
            d = (dx * (py - ay) - dy * (px - ax)) * inv
            if d < best:
                best = d
    return best


def _constraint_roots(r: float, phi: float, dx: float, dy: float, a0_cross: float, lo: float, hi: float) -> list[float]:
    """Angles in [lo, hi] where a radius-r vertex at polar angle phi (from +y,
    clockwise) crosses the line of an edge with direction (dx, dy) through a
    point with cross(d, a0) = a0_cross.  cos(phi + alpha + psi) = w form."""
    dlen = math.hypot(dx, dy)
    if r == 0.0 or dlen == 0.0:
        return []
    w = a0_cross / (r * dlen)
    if abs(w) > 1.0:
        if abs(w) > 1.0 + 1e-9:
            return []
        w = max(-1.0, min(1.0, w))
    psi = math.atan2(dy, dx)
    base = math.acos(w)
    roots: list[float] = []
    two_pi = 2.0 * math.pi
    for sign in (base, -base):
        a0 = sign - phi - psi
        k = round(((lo + hi) / 2.0 - a0) / two_pi)
        for kk in (k - 1, k, k + 1):
            a = a0 + kk * two_pi
            if lo <= a <= hi:
                roots.append(a)
    return roots


def solve_rotation(inner: WedgePolygon, outer: WedgePolygon, tol: float = 1e-10) -> RotationVerdict:
    """Sweep clockwise rotations of the inner wedge inside the outer one.

    Containment of convex wedges holds iff every rotated inner vertex lies in
    the outer wedge, so the status can only change where a vertex crosses an
    edge line.  All such event angles inside the (analytically sufficient)
    sweep window are enumerated, the margin is evaluated at events, midpoints
    and window ends, and the best margin decides YES / NO / UNCERTAIN.
    Outside the window an extreme inner arc point leaves the outer sector, so
    the window restriction loses no solutions.
    """
    span_in = float(inner.arcs.hi - inner.arcs.lo)
    lo_a = (float(outer.arcs.lo) - float(inner.arcs.lo)) / 100.0
    hi_a = (float(outer.arcs.hi) - float(inner.arcs.hi)) / 100.0
    if lo_a > hi_a:
        lo_a, hi_a = hi_a, lo_a
    pad = 1e-7 + 0.05 * max(hi_a - lo_a, span_in / 100.0)
    lo_a -= pad
    hi_a += pad

    edges = _edge_data(outer)
    angles: set[float] = {lo_a, hi_a}

    # inner-vertex-on-outer-edge-line events
    for x, y in inner.vertices[1:]:
        r = math.hypot(x, y)
        phi = math.atan2(x, y)  # angle from +y axis, clockwise-positive
        for ax, ay, dx, dy, _ in edges:
            a0_cross = dx * ay - dy * ax
            angles.update(_constraint_roots(r, phi, dx, dy, a0_cross, lo_a, hi_a))
    # outer-vertex-on-inner-edge-line events (rotate the outer vertex backwards)
    for (ax, ay), (bx, by) in inner.edges():
        dx, dy = bx - ax, by - ay
        a0_cross = dx * ay - dy * ax
        for x, y in outer.vertices[1:]:
            r = math.hypot(x, y)
            phi = math.atan2(x, y)
            # cos(phi - alpha + psi) = w  ->  negate the sweep variable
            flipped = _constraint_roots(r, phi, dx, dy, a0_cross, -hi_a, -lo_a)
            angles.update(-a for a in flipped)

    events = sorted(angles)
    evals = list(events)
    evals.extend((a + b) / 2.0 for a, b in zip(events, events[1:]))

    best_margin = -math.inf
    best_angle = 0.0
    for a in sorted(evals):
        m = _margin_at(a, inner, edges)
        if m > best_margin:
            best_margin = m
            best_angle = a
    if best_margin > tol:
        return RotationVerdict("yes", best_angle, best_margin, tol, len(evals))
    if best_margin < -tol:
        return RotationVerdict("no", None, best_margin, tol, len(evals))
    return RotationVerdict("uncertain", None, best_margin, tol, len(evals))


def verify_rotation_angle(inner: WedgePolygon, outer: WedgePolygon, angle: float, tol: float = 1e-12) -> bool:
    """Independent fixed-angle check: every rotated vertex on the inner side
    of every outer edge (closed, with tolerance)."""
    for p in inner.vertices:
        px, py = _rotate_cw(p, angle)
        for (ax, ay), (bx, by) in outer.edges():
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) < -tol:
                return False
    return True


def flip_probe(inner: WedgePolygon, outer: WedgePolygon) -> FlipProbe:
    """Width argument against the half-turn placement.

    After a half turn the inner wedge's wide end must sit inside the outer
    cone; the two cone edges give, per wide-end point, a linear lower bound
    on the lift along the outer bisector.  The lift needed already exceeds
    the outer wedge's reach, so the turned inner wedge's far vertex pokes
    out; the probe reports both numbers.
    """
    mid = (float(outer.arcs.lo) + float(outer.arcs.hi)) / 200.0
    u = (math.sin(mid), math.cos(mid))
    cone_dirs = [circle_map(outer.arcs.lo), circle_map(outer.arcs.hi)]
    # Each cone-edge constraint cross(d, f + t*u) on the sector side is
    # eventually met as t grows (u points into the sector), so it reads
    # t >= t* with t* the crossing; the lift is the max of the four bounds.
    lifts = [0.0]
    for end in (inner.arcs.lo, inner.arcs.hi):
        ex, ey = circle_map(end)
        fx, fy = -ex, -ey  # half turn about the origin
        for dx, dy in cone_dirs:
            den = dx * u[1] - dy * u[0]
            if den == 0.0:
                continue
            lifts.append(-(dx * fy - dy * fx) / den)
    min_lift = max(lifts)
    max_reach = max(math.hypot(x, y) for x, y in outer.vertices)
    return FlipProbe(
        inner_width=float(inner.arcs.width()),
        outer_width=float(outer.arcs.width()),
        min_lift=min_lift,
        max_reach=max_reach,
    )


def solve_rigid(inner: WedgePolygon, outer: WedgePolygon, tol: float = 1e-10) -> RotationVerdict:
    """Rigid-motion containment for wedge gadgets built from padded instances.

    The sentinel arcs pin any valid motion to a rotation about the shared
    origin: the probe rules out the turned-around family numerically, and the
    rotation sweep decides the aligned family.  Raises ProvenanceRequired for
    wedges that did not come from pad_and_normalize.
    """
    for w in (inner, outer):
        prov = w.arcs.provenance
        if prov is None or "pad_scale" not in prov.meta:
            raise ProvenanceRequired("solve_rigid needs wedges built from pad_and_normalize output")
    probe = flip_probe(inner, outer)
    if probe.feasible:
        return RotationVerdict("uncertain", None, 0.0, tol, 0, flip=probe)
    verdict = solve_rotation(inner, outer, tol)
    return RotationVerdict(verdict.answer, verdict.witness_angle, verdict.margin, tol, verdict.evaluations, flip=probe)


def wedges_from_instance(inst: SegContPntInstance) -> tuple[WedgePolygon, WedgePolygon, SegContPntInstance]:
    """Convenience: pad, split arcs, build both wedges; returns the padded
    instance as the exact 1-D oracle companion."""
    padded = pad_and_normalize(inst)
    inner_arcs, outer_arcs = arc_sets(padded)
    return build_wedge(inner_arcs), build_wedge(outer_arcs), padded

"""Comb polygons: SegContPnt recast as polygon containment under translation.

A 1-D set S (union of closed intervals) becomes the comb
``S x [0,1]  union  span(S) x [-1,0]``: a base slab with one tooth per
interval.  Containment of one comb in another at translation (u, 0) holds
exactly when S_P + u is a subset of S_Q; equal comb heights force the
vertical component of any witness to be exactly 0.

Points must first be fattened into intervals of a common width w > 0
(points [x, x+w], target intervals [lo, hi+w]); per-point containment in a
single interval is unchanged for any w, and keeping w below half the
smallest gap on both sides preserves the global answer and tooth
disjointness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidFattening
from .geometry import Interval, IntervalSet, Point2, Polygon
from .instances import Provenance, SegContPntInstance
from .rationals import rat


@dataclass(frozen=True)
class CombParams:
    """Fattening width shared by both sides of a comb pair."""

    width: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "width", rat(self.width))
        if self.width <= 0:
            raise InvalidFattening("fattening width must be positive")


@dataclass(frozen=True)
class CombPair:
    """Inner comb (from the point side), outer comb (from the intervals)."""

    inner: Polygon
    outer: Polygon
    params: CombParams
    provenance: Provenance | None = None


def default_fattening(inst: SegContPntInstance) -> CombParams:
    """Half of half the smallest positive gap on either side (1/4 fallback)."""
    gaps: list[Fraction] = []
    pts = sorted(set(inst.points))
    gaps.extend(b - a for a, b in zip(pts, pts[1:]))
    qgap = inst.intervals.min_gap()
    if qgap is not None:
        gaps.append(qgap)
    if not gaps:
        return CombParams(Fraction(1, 4))
    return CombParams(min(gaps) / 4)


def fatten(inst: SegContPntInstance, params: CombParams) -> tuple[IntervalSet, IntervalSet]:
    """Fatten points to [p, p+w] and intervals to [lo, hi+w].

    Raises InvalidFattening when w reaches half of a gap on either side,
    which could merge teeth or let a fattened point bridge two targets.
    """
    w = params.width
    pts = sorted(set(inst.points))
    for a, b in zip(pts, pts[1:]):
        if 2 * w >= b - a:
            raise InvalidFattening(f"width {w} too large for point gap {b - a}")
    qgap = inst.intervals.min_gap()
    if qgap is not None and 2 * w >= qgap:
        raise InvalidFattening(f"width {w} too large for interval gap {qgap}")
    fat_p = IntervalSet([Interval(p, p + w) for p in pts])
    fat_q = IntervalSet([Interval(iv.lo, iv.hi + w) for iv in inst.intervals])
    return fat_p, fat_q


def comb_polygon(teeth: IntervalSet) -> Polygon:
    """CCW comb for a set of positive-length teeth intervals.

    Base slab spans the whole set at y in [-1, 0]; each tooth rises to y = 1.
    """
    ivs = teeth.intervals
    if any(iv.length == 0 for iv in ivs):
        raise InvalidFattening("comb teeth must have positive length; fatten points first")
    lo = ivs[0].lo
    hi = ivs[-1].hi
    one = Fraction(1)
    verts: list[Point2] = [Point2(lo, -one), Point2(hi, -one), Point2(hi, one)]
    for idx in range(len(ivs) - 1, 0, -1):
        cur = ivs[idx]
        prev = ivs[idx - 1]
        verts.append(Point2(cur.lo, one))
        verts.append(Point2(cur.lo, Fraction(0)))
        verts.append(Point2(prev.hi, Fraction(0)))
        verts.append(Point2(prev.hi, one))
    verts.append(Point2(lo, one))
    return Polygon(verts)


def build_comb_pair(inst: SegContPntInstance, params: CombParams | None = None) -> CombPair:
    """Comb pair whose translational containment matches the SegContPnt answer."""
    if params is None:
        params = default_fattening(inst)
    fat_p, fat_q = fatten(inst, params)
    prov = (inst.provenance or Provenance()).extend("segcontpnt-to-polycont", width=params.width)
    return CombPair(
        inner=comb_polygon(fat_p),
        outer=comb_polygon(fat_q),
        params=params,
        provenance=prov,
    )

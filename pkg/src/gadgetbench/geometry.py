"""Exact planar geometry kernel over rational coordinates.

Everything here is decision-exact: predicates are computed with Fraction
arithmetic and return exact answers, never tolerances.  The float-based
modules (rotation, hausdorff) build on top of this kernel but do their own
error accounting.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput
from .rationals import rat


@dataclass(frozen=True, slots=True)
class Point2:
    x: Fraction
    y: Fraction

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, k: Fraction) -> "Point2":
        return Point2(self.x * k, self.y * k)

    def dot(self, other: "Point2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Fraction:
        return self.x * self.x + self.y * self.y


def pt(x: int | str | Fraction, y: int | str | Fraction) -> Point2:
    return Point2(rat(x), rat(y))


def orient2d(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the signed area of triangle abc: +1 left turn, -1 right, 0 collinear."""
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class Side(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] on the rational line; lo == hi is a point."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise DegenerateInput(f"interval with lo > hi: [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi


class IntervalSet:
    """Finite union of pairwise disjoint closed intervals, kept sorted.

    Disjoint is strict: consecutive intervals must satisfy prev.hi < next.lo,
    so the union has an unambiguous gap structure.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: list[Interval] | tuple[Interval, ...]):
        ivs = tuple(sorted(intervals, key=lambda iv: (iv.lo, iv.hi)))
        for a, b in zip(ivs, ivs[1:]):
            if a.hi >= b.lo:
                raise DegenerateInput(f"intervals overlap or touch: [{a.lo},{a.hi}] and [{b.lo},{b.hi}]")
        self.intervals = ivs

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        body = " ".join(f"[{iv.lo},{iv.hi}]" for iv in self.intervals)
        return f"IntervalSet({body})"

    def is_empty(self) -> bool:
        return not self.intervals

    def span(self) -> Interval:
        """Smallest single interval covering the whole set."""
        if not self.intervals:
            raise DegenerateInput("span of empty interval set")
        return Interval(self.intervals[0].lo, self.intervals[-1].hi)

    def contains(self, x: Fraction) -> bool:
        idx = bisect_right(self.intervals, x, key=lambda iv: iv.lo) - 1
        return idx >= 0 and x <= self.intervals[idx].hi

    def locate(self, x: Fraction) -> int | None:
        """Index of the member interval containing x, or None."""
        idx = bisect_right(self.intervals, x, key=lambda iv: iv.lo) - 1
        if idx >= 0 and x <= self.intervals[idx].hi:
            return idx
        return None

    def distance(self, x: Fraction) -> Fraction:
        """Exact distance from x to the union (0 when covered)."""
        if not self.intervals:
            raise DegenerateInput("distance to empty interval set")
        idx = bisect_right(self.intervals, x, key=lambda iv: iv.lo) - 1
        best: Fraction | None = None
        if idx >= 0:
            iv = self.intervals[idx]
            if x <= iv.hi:
                return Fraction(0)
            best = x - iv.hi
        if idx + 1 < len(self.intervals):
            d = self.intervals[idx + 1].lo - x
            if best is None or d < best:
                best = d
        assert best is not None
        return best

    def gaps(self) -> list[Interval]:
        """Open gaps between consecutive members, returned as closed [hi_i, lo_{i+1}]."""
        return [Interval(a.hi, b.lo) for a, b in zip(self.intervals, self.intervals[1:])]

    def min_gap(self) -> Fraction | None:
        """Smallest distance between consecutive members (None if < 2 members)."""
        gaps = [b.lo - a.hi for a, b in zip(self.intervals, self.intervals[1:])]
        return min(gaps) if gaps else None

    def endpoints(self) -> list[Fraction]:
        out: list[Fraction] = []
        for iv in self.intervals:
            out.append(iv.lo)
            if iv.hi != iv.lo:
                out.append(iv.hi)
        return out

    def translate(self, delta: Fraction) -> "IntervalSet":
        return IntervalSet([Interval(iv.lo + delta, iv.hi + delta) for iv in self.intervals])

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo <= hi:
                out.append(Interval(lo, hi))
            if a[i].hi < b[j].hi:
                i += 1
            else:
                j += 1
        return IntervalSet(_merge_touching(out))


def _merge_touching(ivs: list[Interval]) -> list[Interval]:
    """Merge intervals that overlap or share endpoints (intersection can abut)."""
    out: list[Interval] = []
    for iv in sorted(ivs, key=lambda v: (v.lo, v.hi)):
        if out and iv.lo <= out[-1].hi:
            if iv.hi > out[-1].hi:
                out[-1] = Interval(out[-1].lo, iv.hi)
        else:
            out.append(iv)
    return out


def _strip_collinear(vertices: list[Point2]) -> list[Point2]:
    """Drop repeated points and middle vertices of collinear triples."""
    pts = [p for i, p in enumerate(vertices) if p != vertices[(i + 1) % len(vertices)]]
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            a = pts[i - 1]
            b = pts[i]
            c = pts[(i + 1) % len(pts)]
            if orient2d(a, b, c) == 0:
                del pts[i]
                changed = True
                break
    return pts


def _segments_properly_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    o1 = orient2d(a, b, c)
    o2 = orient2d(a, b, d)
    o3 = orient2d(c, d, a)
    o4 = orient2d(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    """p lies on closed segment ab (assumes nothing)."""
    if orient2d(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)) and (min(a.y, b.y) <= p.y <= max(a.y, b.y))


class Polygon:
    """Simple polygon with CCW rational vertices and no three collinear in a row.

    The constructor normalizes (drops duplicate / collinear vertices), verifies
    positive signed area, and checks simplicity pairwise.  Simplicity checking
    is quadratic, which is fine at the sizes this package handles.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: list[Point2] | tuple[Point2, ...], *, check_simple: bool = True):
        pts = _strip_collinear(list(vertices))
        if len(pts) < 3:
            raise DegenerateInput("polygon needs at least 3 non-collinear vertices")
        if _signed_area2(pts) < 0:
            pts.reverse()
        if _signed_area2(pts) <= 0:
            raise DegenerateInput("polygon has zero area")
        if check_simple and not _is_simple(pts):
            raise DegenerateInput("polygon boundary self-intersects")
        self.vertices = tuple(pts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.vertices)} vertices)"

    def edges(self) -> list[tuple[Point2, Point2]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def area2(self) -> Fraction:
        """Twice the (positive) enclosed area, exact."""
        return _signed_area2(list(self.vertices))

    def translate(self, t: Point2) -> "Polygon":
        moved = [p + t for p in self.vertices]
        out = object.__new__(type(self))
        out.vertices = tuple(moved)
        return out

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)


class ConvexPolygon(Polygon):
    """Polygon whose every vertex triple turns strictly left (CCW)."""

    __slots__ = ()

    def __init__(self, vertices: list[Point2] | tuple[Point2, ...]):
        super().__init__(vertices, check_simple=False)
        v = self.vertices
        n = len(v)
        for i in range(n):
            if orient2d(v[i], v[(i + 1) % n], v[(i + 2) % n]) <= 0:
                raise DegenerateInput("vertices are not in strictly convex position")

    def support(self, direction: Point2) -> Fraction:
        """max over vertices of <vertex, direction>, exact."""
        return max(p.dot(direction) for p in self.vertices)


def _signed_area2(pts: list[Point2]) -> Fraction:
    total = Fraction(0)
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        total += a.cross(b)
    return total


def _is_simple(pts: list[Point2]) -> bool:
    n = len(pts)
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                # shared endpoint is fine; any other contact is not
                shared = b if j == i + 1 else a
                other = c if shared == d else d
                if _segments_properly_cross(a, b, c, d):
                    return False
                if _on_segment(a, b, other) and other not in (a, b):
                    return False
                continue
            if _segments_properly_cross(a, b, c, d):
                return False
            if any(_on_segment(a, b, p) for p in (c, d)) or any(_on_segment(c, d, p) for p in (a, b)):
                return False
    return True


def convex_hull(points: list[Point2]) -> ConvexPolygon:
    """Convex hull by monotone chain; collinear boundary points are dropped.

    Raises DegenerateInput when the input has no three non-collinear points.
    """
    pts = sorted(set((p.x, p.y) for p in points))
    pts = [Point2(x, y) for x, y in pts]
    if len(pts) < 3:
        raise DegenerateInput("hull needs at least 3 distinct points")

    def chain(seq: list[Point2]) -> list[Point2]:
        out: list[Point2] = []
        for p in seq:
            while len(out) >= 2 and orient2d(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points collinear")
    return ConvexPolygon(hull)


def point_in_polygon(p: Point2, poly: Polygon) -> Side:
    """Exact point location: INSIDE / BOUNDARY / OUTSIDE.

    Boundary is detected per edge first; the parity walk below then never has
    to disambiguate rays through vertices for the query point itself.
    """
    for a, b in poly.edges():
        if _on_segment(a, b, p):
            return Side.BOUNDARY
    inside = False
    for a, b in poly.edges():
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate where edge crosses the horizontal through p
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_cross > p.x:
                inside = not inside
    return Side.INSIDE if inside else Side.OUTSIDE


def point_segment_distance_sq(p: Point2, a: Point2, b: Point2) -> Fraction:
    """Exact squared distance from p to closed segment ab (a == b allowed)."""
    d = b - a
    dd = d.norm_sq()
    if dd == 0:
        return (p - a).norm_sq()
    t = (p - a).dot(d) / dd
    if t < 0:
        t = Fraction(0)
    elif t > 1:
        t = Fraction(1)
    foot = a + d.scale(t)
    return (p - foot).norm_sq()


def point_line_distance_sq(p: Point2, a: Point2, b: Point2) -> Fraction:
    """Exact squared distance from p to the infinite line through a, b."""
    d = b - a
    dd = d.norm_sq()
    if dd == 0:
        raise DegenerateInput("line through two identical points")
    c = d.cross(p - a)
    return c * c / dd


def segment_intersection_params(u: Point2, w: Point2, a: Point2, b: Point2) -> list[Fraction]:
    """Parameters t in [0,1] along segment u->w where it meets segment a->b.

    A transversal or touching intersection contributes one parameter; a
    collinear overlap contributes the two parameters bounding the shared
    subsegment.  All arithmetic exact.
    """
    d1 = w - u
    d2 = b - a
    denom = d1.cross(d2)
    rel = a - u
    if denom != 0:
        t = rel.cross(d2) / denom
        s = rel.cross(d1) / denom
        if 0 <= t <= 1 and 0 <= s <= 1:
            return [t]
        return []
    if rel.cross(d1) != 0:
        return []  # parallel, not collinear
    dd = d1.norm_sq()
    if dd == 0:
        return [Fraction(0)] if _on_segment(a, b, u) else []
    ta = (a - u).dot(d1) / dd
    tb = (b - u).dot(d1) / dd
    lo, hi = min(ta, tb), max(ta, tb)
    lo = max(lo, Fraction(0))
    hi = min(hi, Fraction(1))
    if lo > hi:
        return []
    return [lo, hi] if lo != hi else [lo]

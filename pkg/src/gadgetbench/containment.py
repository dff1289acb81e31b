"""Exact polygon-in-polygon containment under translation.

``polygon_contains_at`` decides closed-region containment at a fixed
translation with rational arithmetic only.  ``solve_polycont`` searches all
translations via the standard contact-constraint candidate set; it is meant
for desk-scale inputs (the candidate set is quadratic in the number of
vertex-edge pairs).  ``solve_cpct`` is the convex-convex specialization via
exact half-plane feasibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import (
    ConvexPolygon,
    Point2,
    Polygon,
    Side,
    point_in_polygon,
    segment_intersection_params,
)
from .rationals import common_denominator


@dataclass(frozen=True, slots=True)
class PlacementWitness:
    """Translation placing the inner polygon inside the outer one."""

    t: Point2


def polygon_contains_at(inner: Polygon, t: Point2, outer: Polygon) -> bool:
    """True iff the closed region inner + t is a subset of the closed outer.

    A simple polygon's exterior is connected, so containment fails exactly
    when some boundary point of inner + t lies strictly outside.  Each inner
    edge is split at every exact intersection with the outer boundary; each
    open subsegment then lies wholly inside, wholly outside, or along the
    boundary, and its midpoint is classified exactly.
    """
    moved = inner.translate(t)
    outer_edges = outer.edges()
    for v in moved.vertices:
        if point_in_polygon(v, outer) is Side.OUTSIDE:
            return False
    for u, w in moved.edges():
        params = {Fraction(0), Fraction(1)}
        for a, b in outer_edges:
            params.update(segment_intersection_params(u, w, a, b))
        cuts = sorted(params)
        d = w - u
        for lo, hi in zip(cuts, cuts[1:]):
            mid = u + d.scale((lo + hi) / 2)
            if point_in_polygon(mid, outer) is Side.OUTSIDE:
                return False
    return True


def _int_line(a: Fraction, b: Fraction, c: Fraction) -> tuple[int, int, int]:
    """Canonical integer form of the line a*x + b*y = c (gcd 1, sign-fixed)."""
    den = common_denominator((a, b, c))
    ai, bi, ci = int(a * den), int(b * den), int(c * den)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci))
    if g:
        ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return ai, bi, ci


def _contact_lines(inner: Polygon, outer: Polygon) -> set[tuple[int, int, int]]:
    """Translation-space lines where a vertex of one polygon rides an edge
    line of the other.  Deduplicated by canonical integer coefficients."""
    lines: set[tuple[int, int, int]] = set()
    for v in inner.vertices:
        for a, b in outer.edges():
            d = b - a
            # cross(d, v + t - a) = 0
            lines.add(_int_line(-d.y, d.x, d.y * (v.x - a.x) - d.x * (v.y - a.y)))
    for q in outer.vertices:
        for a, b in inner.edges():
            d = b - a
            # cross(d, q - (a + t)) = 0
            lines.add(_int_line(d.y, -d.x, d.y * (q.x - a.x) - d.x * (q.y - a.y)))
    return lines


def _translation_box(inner: Polygon, outer: Polygon) -> tuple[Fraction, Fraction, Fraction, Fraction] | None:
    """Bounding-box constraint on feasible translations (None if empty)."""
    ix0, ix1, iy0, iy1 = inner.bbox()
    ox0, ox1, oy0, oy1 = outer.bbox()
    tx_lo, tx_hi = ox0 - ix0, ox1 - ix1
    ty_lo, ty_hi = oy0 - iy0, oy1 - iy1
    if tx_lo > tx_hi or ty_lo > ty_hi:
        return None
    return tx_lo, tx_hi, ty_lo, ty_hi


def solve_polycont(inner: Polygon, outer: Polygon) -> PlacementWitness | None:
    """Exact containment-under-translation for simple polygons.

    If any translation works, the lex-min feasible translation is pinned by
    two independent contact constraints or by a vertex-on-vertex contact, so
    the candidate set {contact-line pair intersections} + {vertex
    differences} meets the feasible set whenever it is nonempty.  Candidates
    are tested in lex order; the first (hence lex-min) valid one is returned.
    """
    if inner.area2() > outer.area2():
        return None
    box = _translation_box(inner, outer)
    if box is None:
        return None
    tx_lo, tx_hi, ty_lo, ty_hi = box

    candidates: set[tuple[Fraction, Fraction]] = set()

    def admit(tx: Fraction, ty: Fraction) -> None:
        if tx_lo <= tx <= tx_hi and ty_lo <= ty <= ty_hi:
            candidates.add((tx, ty))

    lines = sorted(_contact_lines(inner, outer))
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            admit(Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))
    for q in outer.vertices:
        for v in inner.vertices:
            admit(q.x - v.x, q.y - v.y)

    outer_edges_cache = outer  # readability; exact tests below
    for tx, ty in sorted(candidates):
        t = Point2(tx, ty)
        ok = True
        for v in inner.vertices:
            if point_in_polygon(v + t, outer_edges_cache) is Side.OUTSIDE:
                ok = False
                break
        if ok and polygon_contains_at(inner, t, outer):
            return PlacementWitness(t)
    return None


def solve_cpct(inner: ConvexPolygon, outer: ConvexPolygon) -> PlacementWitness | None:
    """Convex-in-convex under translation via exact half-plane feasibility.

    Each outer edge with outward normal nu and offset c contributes the
    constraint nu . t <= c - support_inner(nu).  The feasible set is a
    bounded convex polygon; its lex-min vertex (if any) is returned.
    """
    constraints: list[tuple[Fraction, Fraction, Fraction]] = []
    for a, b in outer.edges():
        d = b - a
        nu = Point2(d.y, -d.x)
        rhs = nu.dot(a) - inner.support(nu)
        constraints.append((nu.x, nu.y, rhs))

    best: tuple[Fraction, Fraction] | None = None
    n = len(constraints)
    for i in range(n):
        a1, b1, r1 = constraints[i]
        for j in range(i + 1, n):
            a2, b2, r2 = constraints[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            tx = (r1 * b2 - r2 * b1) / det
            ty = (a1 * r2 - a2 * r1) / det
            if all(ax * tx + by * ty <= r for ax, by, r in constraints):
                cand = (tx, ty)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    return PlacementWitness(Point2(*best))

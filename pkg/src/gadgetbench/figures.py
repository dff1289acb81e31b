"""Gadget figures as standalone SVG 1.1, plus matplotlib summaries for bench
and audit runs.

The SVG writer is deliberately small: closed polygon paths, clipped lines,
circles, all in user units with the y axis flipped so the data's "up" is up
on screen.  The four-line gadget sits at epsilon scale, so its renderer uses
an independent vertical zoom and records the exact line heights in data-y
attributes for inspection.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .combs import CombPair
from .errors import PreconditionViolated
from .geometry import Polygon
from .hausdorff import Line, Segment, SegmentSet, SeparationBound
from .rationals import format_rational
from .rotation import WedgePolygon


def _fmt(x: float) -> str:
    s = f"{x:.8g}"
    return "0" if s == "-0" else s


class _Svg:
    """Accumulates shapes in data coordinates; y is flipped at write time."""

    def __init__(self) -> None:
        self.body: list[str] = []
        self.x0 = math.inf
        self.x1 = -math.inf
        self.y0 = math.inf
        self.y1 = -math.inf

    def _grow(self, x: float, y: float) -> None:
        self.x0 = min(self.x0, x)
        self.x1 = max(self.x1, x)
        self.y0 = min(self.y0, -y)
        self.y1 = max(self.y1, -y)

    def path(self, pts, **attrs) -> None:
        flipped = [(x, -y) for x, y in pts]
        for x, y in flipped:
            self._grow(x, -y)
        d = "M " + " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in flipped) + " Z"
        self.body.append(f'<path d="{d}"{_attr_str(attrs)}/>')

    def line(self, x1, y1, x2, y2, **attrs) -> None:
        self._grow(x1, y1)
        self._grow(x2, y2)
        self.body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(-y1)}" x2="{_fmt(x2)}" y2="{_fmt(-y2)}"{_attr_str(attrs)}/>'
        )

    def circle(self, cx, cy, r, **attrs) -> None:
        self._grow(cx - r, cy - r)
        self._grow(cx + r, cy + r)
        self.body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(r)}"{_attr_str(attrs)}/>')

    def write(self, path: str | Path) -> None:
        pad = 0.05 * max(self.x1 - self.x0, self.y1 - self.y0, 1e-9)
        x0, y0 = self.x0 - pad, self.y0 - pad
        w = (self.x1 - self.x0) + 2 * pad
        h = (self.y1 - self.y0) + 2 * pad
        doc = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
            f'width="640" height="{_fmt(640 * h / w)}">',
            *self.body,
            "</svg>",
        ]
        Path(path).write_text("\n".join(doc) + "\n")


def _attr_str(attrs: dict) -> str:
    if not attrs:
        return ""
    parts = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return parts


def _stroke(scale: float) -> str:
    return _fmt(scale / 200)


def render_comb(obj: Polygon | CombPair, path: str | Path) -> None:
    """One closed path per comb polygon; pairs draw outer behind inner."""
    svg = _Svg()
    if isinstance(obj, CombPair):
        polys = [(obj.outer, "outer", "#7aa6c2"), (obj.inner, "inner", "#c27a7a")]
    else:
        polys = [(obj, "comb", "#7aa6c2")]
    span = max(float(p.bbox()[1] - p.bbox()[0]) for p, _, _ in polys)
    for poly, role, color in polys:
        pts = [(float(v.x), float(v.y)) for v in poly.vertices]
        svg.path(
            pts,
            data_role=role,
            fill=color,
            fill_opacity="0.45",
            stroke="#222222",
            stroke_width=_stroke(span),
        )
    svg.write(path)


def render_wedges(inner: WedgePolygon, outer: WedgePolygon, path: str | Path) -> None:
    """Two convex closed paths sharing the origin vertex."""
    svg = _Svg()
    for wedge, role, color in ((outer, "outer", "#7aa6c2"), (inner, "inner", "#c27a7a")):
        svg.path(
            list(wedge.vertices),
            data_role=role,
            fill=color,
            fill_opacity="0.45",
            stroke="#222222",
            stroke_width=_stroke(1.0),
        )
    svg.circle(0.0, 0.0, 0.004, data_role="origin", fill="#222222")
    svg.write(path)


def render_hausdorff_gadget(a: SegmentSet, b: SegmentSet, eps: SeparationBound, path: str | Path) -> None:
    """Points, intervals, and the four lines; epsilon-scale heights are
    stretched by an auto zoom so the layering is visible, with exact heights
    kept in data-y attributes."""
    finite_x: list[float] = []
    for s in (a, b):
        for el in s.elements:
            if isinstance(el, Segment):
                finite_x += [float(el.a.x), float(el.b.x)]
    if not finite_x:
        raise PreconditionViolated("gadget rendering needs at least one finite element")
    x_lo, x_hi = min(finite_x) - 1.0, max(finite_x) + 1.0
    span = x_hi - x_lo
    e = float(eps.epsilon)
    zoom = span * 0.15 / (1.6 * e)  # tallest line sits at 15% of the width

    svg = _Svg()
    ex = eps.epsilon
    exact_roles = {
        Fraction(8, 5) * ex: "l1",
        Fraction(4, 5) * ex: "l2",
        Fraction(-4, 5) * ex: "l3",
        Fraction(-8, 5) * ex: "l4",
    }
    roles = {}
    for s, owner in ((a, "A"), (b, "B")):
        for el in s.elements:
            if isinstance(el, Line):
                name = exact_roles.get(el.p.y, "line")
                roles[name] = (float(el.p.y), el.p.y, owner)
    for name in ("l1", "l2", "l3", "l4"):
        if name not in roles:
            raise PreconditionViolated("not a four-line gadget: missing " + name)
        y, y_exact, owner = roles[name]
        svg.line(
            x_lo, y * zoom, x_hi, y * zoom,
            data_role=name,
            data_owner=owner,
            data_y=format_rational(y_exact),
            stroke="#555555" if owner == "B" else "#aa5555",
            stroke_width=_stroke(span),
        )
    for el in b.elements:
        if isinstance(el, Segment):
            svg.line(
                float(el.a.x), 0.0, float(el.b.x), 0.0,
                data_role="interval", stroke="#33691e", stroke_width=_stroke(span / 2),
                stroke_linecap="round",
            )
    for el in a.elements:
        if isinstance(el, Segment):
            svg.circle(float(el.a.x), 0.0, span / 150, data_role="point", fill="#b71c1c")
    svg.write(path)


def bench_plot(records, path: str | Path) -> None:
    """Log-log median wall time against size, one series per solver."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    by_solver: dict[str, list] = {}
    for r in records:
        by_solver.setdefault(r.solver, []).append(r)
    for solver, rs in sorted(by_solver.items()):
        rs = sorted(rs, key=lambda r: r.n)
        ax.loglog([r.n for r in rs], [r.median_ns / 1e9 for r in rs], "o-", label=solver)
    ax.set_xlabel("n")
    ax.set_ylabel("median seconds")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def audit_plot(report, path: str | Path) -> None:
    """Stacked agreement counts for an audit report."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    s = report.summary()
    fig, ax = plt.subplots(figsize=(5, 3.5))
    keys = ["agree", "disagree", "uncertain_stages", "oracle_skipped_stages"]
    colors = ["#2e7d32", "#c62828", "#f9a825", "#90a4ae"]
    ax.bar(range(len(keys)), [s[k] for k in keys], color=colors)
    ax.set_xticks(range(len(keys)), keys, rotation=20, ha="right")
    ax.set_ylabel("count")
    ax.set_title(f"{s['instances']} instances audited")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

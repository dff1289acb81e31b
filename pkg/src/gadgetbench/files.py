"""Instance files: canonical JSON with exact "p/q" rational strings.

The document layout is {"kind": tag, "payload": body, "provenance": record}
with provenance null for hand-made instances.  Serialization is canonical
(sorted keys, fixed separators, trailing newline) so identical instances
produce byte-identical files, which the generator determinism tests rely on.

Provenance meta values are ints, strings, or rationals; rationals are stored
as "p/q" strings and recognized on load by shape.  Payload rationals are
always "p/q" strings, including integers ("7" round-trips as Fraction(7)).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import PreconditionViolated
from .geometry import Interval, IntervalSet
from .hausdorff import Line, Segment, SegmentSet
from .geometry import Point2
from .instances import (
    EqDistInstance,
    Provenance,
    SegContPntInstance,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
)
from .rationals import format_rational, parse_rational

Instance = ThreeSumInstance | ThreeSumPrimeInstance | EqDistInstance | SegContPntInstance

KIND_OF_TYPE = {
    ThreeSumInstance: "3sum",
    ThreeSumPrimeInstance: "3sum-prime",
    EqDistInstance: "eqdist",
    SegContPntInstance: "segcontpnt",
}
KINDS = tuple(KIND_OF_TYPE.values())

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    instance: Instance

    def __post_init__(self) -> None:
        expected = KIND_OF_TYPE.get(type(self.instance))
        if expected != self.kind:
            raise PreconditionViolated(f"kind {self.kind!r} does not match payload type")


def kind_of(instance: Instance) -> str:
    try:
        return KIND_OF_TYPE[type(instance)]
    except KeyError:
        raise PreconditionViolated(f"not a serializable instance: {type(instance).__name__}") from None


def _meta_out(value):
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [_meta_out(v) for v in value]
    return format_rational(value)


def _meta_in(value):
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return parse_rational(value)
    if isinstance(value, list):
        return tuple(_meta_in(v) for v in value)
    return value


def _provenance_out(prov: Provenance | None):
    if prov is None:
        return None
    return {
        "chain": list(prov.chain),
        "meta": {k: _meta_out(v) for k, v in sorted(prov.meta.items())},
    }


def _provenance_in(obj) -> Provenance | None:
    if obj is None:
        return None
    return Provenance(tuple(obj["chain"]), {k: _meta_in(v) for k, v in obj["meta"].items()})


def _payload_out(inst: Instance) -> dict:
    if isinstance(inst, ThreeSumInstance):
        return {"values": [format_rational(v) for v in inst.values]}
    if isinstance(inst, ThreeSumPrimeInstance):
        return {side: [format_rational(v) for v in getattr(inst, side)] for side in ("a", "b", "c")}
    if isinstance(inst, EqDistInstance):
        return {
            "p": [format_rational(v) for v in inst.p],
            "q": [format_rational(v) for v in inst.q],
        }
    return {
        "points": [format_rational(v) for v in inst.points],
        "intervals": [[format_rational(iv.lo), format_rational(iv.hi)] for iv in inst.intervals],
    }


def _payload_in(kind: str, body: dict, prov: Provenance | None) -> Instance:
    if kind == "3sum":
        return ThreeSumInstance(tuple(parse_rational(v) for v in body["values"]), provenance=prov)
    if kind == "3sum-prime":
        return ThreeSumPrimeInstance(
            tuple(parse_rational(v) for v in body["a"]),
            tuple(parse_rational(v) for v in body["b"]),
            tuple(parse_rational(v) for v in body["c"]),
            provenance=prov,
        )
    if kind == "eqdist":
        return EqDistInstance(
            tuple(parse_rational(v) for v in body["p"]),
            tuple(parse_rational(v) for v in body["q"]),
            provenance=prov,
        )
    if kind == "segcontpnt":
        return SegContPntInstance(
            points=tuple(parse_rational(v) for v in body["points"]),
            intervals=IntervalSet([Interval(parse_rational(lo), parse_rational(hi)) for lo, hi in body["intervals"]]),
            provenance=prov,
        )
    raise PreconditionViolated(f"unknown instance kind {kind!r}")


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dumps(instance: Instance) -> str:
    return _canonical(
        {
            "kind": kind_of(instance),
            "payload": _payload_out(instance),
            "provenance": _provenance_out(instance.provenance),
        }
    )


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
        kind = doc["kind"]
        prov = _provenance_in(doc.get("provenance"))
        return _payload_in(kind, doc["payload"], prov)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PreconditionViolated):
            raise
        raise PreconditionViolated(f"malformed instance file: {exc}") from exc


def write_instance(path: str | Path, instance: Instance) -> None:
    Path(path).write_text(dumps(instance))


def read_instance(path: str | Path) -> Instance:
    return loads(Path(path).read_text())


# segment sets share the file conventions; elements carry a tag

def _point_out(p: Point2) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def _point_in(obj) -> Point2:
    return Point2(parse_rational(obj[0]), parse_rational(obj[1]))


def dumps_segmentset(s: SegmentSet) -> str:
    elements = []
    for el in s.elements:
        if isinstance(el, Segment):
            elements.append({"tag": "segment", "a": _point_out(el.a), "b": _point_out(el.b)})
        else:
            elements.append({"tag": "line", "p": _point_out(el.p), "d": _point_out(el.d)})
    return _canonical({"elements": elements, "provenance": _provenance_out(s.provenance)})


def loads_segmentset(text: str) -> SegmentSet:
    try:
        doc = json.loads(text)
        out = []
        for el in doc["elements"]:
            if el["tag"] == "segment":
                out.append(Segment(_point_in(el["a"]), _point_in(el["b"])))
            elif el["tag"] == "line":
                out.append(Line(_point_in(el["p"]), _point_in(el["d"])))
            else:
                raise PreconditionViolated(f"unknown element tag {el['tag']!r}")
        return SegmentSet(tuple(out), _provenance_in(doc.get("provenance")))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PreconditionViolated):
            raise
        raise PreconditionViolated(f"malformed segment set: {exc}") from exc


def certification_report(bounds, eps, grid_step: float, box) -> str:
    """Certification result as canonical JSON: bounds, grid parameters, and
    the truncation rationale for the searched box."""
    (x_lo, x_hi), (y_lo, y_hi) = box
    return _canonical(
        {
            "lower": bounds.lower,
            "upper": bounds.upper,
            "certified": bounds.certified,
            "epsilon": format_rational(eps.epsilon),
            "m_max": eps.m_max,
            "grid_step": grid_step,
            "search_box": {"x": [x_lo, x_hi], "y": [y_lo, y_hi]},
            "truncation": (
                "vertical range limited to |v| <= 0.3*epsilon (larger shifts leave the "
                "far lines mismatched by more than epsilon); horizontal range limited to "
                "the interval/point extents plus one (larger shifts only grow every "
                "point's mismatch)"
            ),
        }
    )

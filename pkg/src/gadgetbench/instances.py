"""Problem instances, witnesses, and reduction provenance.

The decision problems form a chain: 3SUM and 3SUM' on the rational line,
EqDist (equal pair difference), and SegContPnt (translate a point set into an
interval union).  Downstream geometric instances (comb pairs, wedge pairs,
Hausdorff gadgets) are built from SegContPnt by the dedicated modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .errors import DegenerateInput, PreconditionViolated
from .geometry import IntervalSet
from .rationals import rat


@dataclass(frozen=True, slots=True)
class TripleIdx:
    """Positions i <= j <= k selecting a zero-sum triple."""

    i: int
    j: int
    k: int


@dataclass(frozen=True, slots=True)
class PairSumIdx:
    """Positions (i, j, k) with a[i] + b[j] = c[k]."""

    i: int
    j: int
    k: int


@dataclass(frozen=True, slots=True)
class QuadIdx:
    """Positions (p1, p2, q1, q2) with p[p1] - p[p2] = q[q1] - q[q2]."""

    p1: int
    p2: int
    q1: int
    q2: int


@dataclass(frozen=True, slots=True)
class Shift:
    """A translation of the point set that witnesses containment."""

    v: Fraction


Witness = Union[TripleIdx, PairSumIdx, QuadIdx, Shift]


@dataclass(frozen=True)
class Provenance:
    """Where an instance came from: reduction step name plus parameters.

    ``chain`` lists step names applied so far, oldest first.  ``meta`` holds
    step-specific data needed by later stages (for example the pair count of
    the EqDist image, which sizes the padding intervals).
    """

    chain: tuple[str, ...] = ()
    meta: dict[str, Any] = field(default_factory=dict)

    def extend(self, step: str, **meta: Any) -> "Provenance":
        merged = dict(self.meta)
        merged.update(meta)
        return Provenance(self.chain + (step,), merged)


@dataclass(frozen=True)
class ThreeSumInstance:
    values: tuple[Fraction, ...]
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        if not self.values:
            raise DegenerateInput("3SUM instance needs at least one value")
        object.__setattr__(self, "values", tuple(rat(v) for v in self.values))

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ThreeSumPrimeInstance:
    """Three equal-size lists; question: a + b = c with one element from each."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        if not (len(self.a) == len(self.b) == len(self.c)):
            raise DegenerateInput("3SUM' lists must have equal sizes")
        if not self.a:
            raise DegenerateInput("3SUM' instance needs at least one element per list")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, tuple(rat(v) for v in getattr(self, name)))

    @property
    def n(self) -> int:
        return len(self.a)

    def in_unit_interval(self) -> bool:
        """True when every value lies strictly inside (0, 1)."""
        return all(0 < v < 1 for v in self.a + self.b + self.c)


@dataclass(frozen=True)
class EqDistInstance:
    """Two number lists; question: p1 - p2 = q1 - q2 for a nontrivial index quad."""

    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        if not self.p or not self.q:
            raise DegenerateInput("EqDist needs nonempty lists")
        object.__setattr__(self, "p", tuple(rat(v) for v in self.p))
        object.__setattr__(self, "q", tuple(rat(v) for v in self.q))


@dataclass(frozen=True)
class SegContPntInstance:
    """Point set P and disjoint interval union Q; question: P + v subset of Q."""

    points: tuple[Fraction, ...]
    intervals: IntervalSet
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        if not self.points:
            raise DegenerateInput("SegContPnt needs at least one point")
        if self.intervals.is_empty():
            raise DegenerateInput("SegContPnt needs at least one interval")
        object.__setattr__(self, "points", tuple(rat(v) for v in self.points))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.intervals)


def require_chain(instance: Any, step_suffix: str, what: str) -> Provenance:
    """Return provenance ending in ``step_suffix`` or raise PreconditionViolated."""
    prov = instance.provenance
    if prov is None or not prov.chain or not prov.chain[-1] == step_suffix:
        raise PreconditionViolated(f"{what} requires an instance produced by step {step_suffix!r}")
    return prov

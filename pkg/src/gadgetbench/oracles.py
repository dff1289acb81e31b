"""Brute-force reference oracles.

Each oracle enumerates candidate witnesses in lexicographic order with no
shared logic with the corresponding solver, so audit disagreements point at
real bugs rather than shared assumptions.  Sizes are expected to be small;
the audit pipeline enforces cutoffs before calling these.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .instances import (
    EqDistInstance,
    PairSumIdx,
    QuadIdx,
    SegContPntInstance,
    Shift,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
    TripleIdx,
)
from .linear import _to_ints


def brute_3sum(inst: ThreeSumInstance, *, distinct: bool = False) -> TripleIdx | None:
    """Cubic enumeration of position triples (lex order, first hit wins)."""
    vals = _to_ints(inst.values)
    picker = combinations if distinct else combinations_with_replacement
    for i, j, k in picker(range(len(vals)), 3):
        if vals[i] + vals[j] + vals[k] == 0:
            return TripleIdx(i, j, k)
    return None


def brute_3sum_prime(inst: ThreeSumPrimeInstance) -> PairSumIdx | None:
    n = inst.n
    for i in range(n):
        for j in range(n):
            want = inst.a[i] + inst.b[j]
            for k in range(n):
                if inst.c[k] == want:
                    return PairSumIdx(i, j, k)
    return None


def brute_eqdist(inst: EqDistInstance) -> QuadIdx | None:
    p, q = inst.p, inst.q
    for i1 in range(len(p)):
        for i2 in range(len(p)):
            d = p[i1] - p[i2]
            for j1 in range(len(q)):
                for j2 in range(len(q)):
                    if i1 == i2 and j1 == j2:
                        continue
                    if q[j1] - q[j2] == d:
                        return QuadIdx(i1, i2, j1, j2)
    return None


def brute_segcontpnt(inst: SegContPntInstance) -> Shift | None:
    """Candidate sweep over both interval endpoints plus midpoints.

    Any feasible shift interval starts at some lo(q) - p and ends at some
    hi(q) - p, so this candidate set meets every feasible interval; the
    midpoints are redundant cover for interior solutions.
    """
    base = sorted(
        {iv.lo - p for iv in inst.intervals for p in inst.points}
        | {iv.hi - p for iv in inst.intervals for p in inst.points}
    )
    candidates = list(base)
    for a, b in zip(base, base[1:]):
        candidates.append((a + b) / 2)
    for v in sorted(candidates):
        if all(inst.intervals.contains(p + v) for p in inst.points):
            return Shift(v)
    return None

"""Solvers and reductions for the 1-D problem chain.

3SUM (zero-sum triple) reduces to 3SUM' (a + b = c across three lists), which
after an affine squeeze into (0, 1) reduces to EqDist (equal pair
difference), which extends to SegContPnt (translate points into an interval
union).  All arithmetic is exact; solvers return lexicographically smallest
witnesses so golden tests are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionViolated
from .geometry import Interval, IntervalSet
from .instances import (
    EqDistInstance,
    PairSumIdx,
    Provenance,
    QuadIdx,
    SegContPntInstance,
    Shift,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
    TripleIdx,
)
from .rationals import common_denominator


# ---------------------------------------------------------------------------
# 3SUM

def _to_ints(values: tuple[Fraction, ...]) -> list[int]:
    """Clear denominators; a+b+c = 0 is invariant under positive scaling."""
    den = common_denominator(values)
    return [int(v * den) for v in values]


def _exists_zero_triple(ints: list[int], distinct: bool) -> bool:
    """Existence-only scan on the sorted values; O(n^2) two-pointer."""
    a = sorted(ints)
    n = len(a)
    if distinct:
        for k in range(2, n):
            t = -a[k]
            lo, hi = 0, k - 1
            while lo < hi:
                s = a[lo] + a[hi]
                if s == t:
                    return True
                if s < t:
                    lo += 1
                else:
                    hi -= 1
        return False
    for k in range(n):
        t = -a[k]
        lo, hi = 0, k
        while lo <= hi:
            s = a[lo] + a[hi]
            if s == t:
                return True
            if s < t:
                lo += 1
            else:
                hi -= 1
    return False


def solve_3sum(inst: ThreeSumInstance, *, distinct: bool = False) -> TripleIdx | None:
    """Quadratic 3SUM solver.

    Default semantics allow a position to be reused (witness i <= j <= k with
    repetition); ``distinct=True`` requires i < j < k.  Returns the
    lexicographically smallest witness, or None.
    """
    vals = _to_ints(inst.values)
    if not _exists_zero_triple(vals, distinct):
        return None
    # A witness exists; find the lex-min one over original positions.
    n = len(vals)
    positions: dict[int, list[int]] = {}
    for idx, v in enumerate(vals):
        positions.setdefault(v, []).append(idx)
    for i in range(n):
        vi = vals[i]
        j0 = i + 1 if distinct else i
        for j in range(j0, n):
            hits = positions.get(-(vi + vals[j]))
            if not hits:
                continue
            k0 = j + 1 if distinct else j
            for k in hits:
                if k >= k0:
                    return TripleIdx(i, j, k)
    raise AssertionError("existence scan and witness scan disagree")


def verify_3sum(inst: ThreeSumInstance, witness: TripleIdx, *, distinct: bool = False) -> bool:
    i, j, k = witness.i, witness.j, witness.k
    if not (0 <= i <= j <= k < inst.n):
        return False
    if distinct and not (i < j < k):
        return False
    v = inst.values
    return v[i] + v[j] + v[k] == 0


# ---------------------------------------------------------------------------
# 3SUM'

def solve_3sum_prime(inst: ThreeSumPrimeInstance) -> PairSumIdx | None:
    """Quadratic solver for a + b = c; returns the lex-min (i, j, k) or None."""
    den = common_denominator(inst.a + inst.b + inst.c)
    a = [int(v * den) for v in inst.a]
    b = [int(v * den) for v in inst.b]
    c = [int(v * den) for v in inst.c]
    first_c: dict[int, int] = {}
    for k, v in enumerate(c):
        if v not in first_c:
            first_c[v] = k
    for i, va in enumerate(a):
        for j, vb in enumerate(b):
            k = first_c.get(va + vb)
            if k is not None:
                return PairSumIdx(i, j, k)
    return None


def verify_3sum_prime(inst: ThreeSumPrimeInstance, witness: PairSumIdx) -> bool:
    i, j, k = witness.i, witness.j, witness.k
    n = inst.n
    if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
        return False
    return inst.a[i] + inst.b[j] == inst.c[k]


def reduce_3sum_to_prime(inst: ThreeSumInstance) -> ThreeSumPrimeInstance:
    """S, S, {-s} as the three lists; s_i + s_j = -s_k mirrors the zero triple."""
    prov = (inst.provenance or Provenance()).extend("3sum-to-prime")
    return ThreeSumPrimeInstance(
        a=inst.values,
        b=inst.values,
        c=tuple(-v for v in inst.values),
        provenance=prov,
    )


def reduce_prime_to_3sum(inst: ThreeSumPrimeInstance) -> ThreeSumInstance:
    """Embed the three lists at separated scales so triples cannot mix blocks.

    With delta = 10 * (1 + max |value|), elements a + delta, b + 2*delta and
    -(c + 3*delta) carry block coefficients (+1, +2, -3); only one-per-block
    triples can cancel the delta part, and those sum to zero iff a + b = c.
    """
    mags = [abs(v) for v in inst.a + inst.b + inst.c]
    delta = 10 * (1 + max(mags))
    values = (
        tuple(v + delta for v in inst.a)
        + tuple(v + 2 * delta for v in inst.b)
        + tuple(-(v + 3 * delta) for v in inst.c)
    )
    prov = (inst.provenance or Provenance()).extend("prime-to-3sum", delta=delta, block=inst.n)
    return ThreeSumInstance(values=values, provenance=prov)


def map_prime_witness_to_3sum(witness: PairSumIdx, block: int) -> TripleIdx:
    i, j, k = witness.i, witness.j + block, witness.k + 2 * block
    return TripleIdx(*sorted((i, j, k)))


def map_3sum_witness_to_prime(witness: TripleIdx, block: int) -> PairSumIdx | None:
    """Decompose a block-embedded triple; None if it does not span the blocks."""
    blocks = sorted((witness.i, witness.j, witness.k))
    if not (blocks[0] < block <= blocks[1] < 2 * block <= blocks[2]):
        return None
    return PairSumIdx(blocks[0], blocks[1] - block, blocks[2] - 2 * block)


def normalize_to_unit_interval(inst: ThreeSumPrimeInstance) -> ThreeSumPrimeInstance:
    """Affine squeeze of a 3SUM' instance into (0, 1), answer-preserving.

    a -> alpha*a + beta, b -> alpha*b + beta, c -> alpha*c + 2*beta with
    beta = 1/4 and alpha = 1/(8*(M+1)) for M the largest magnitude; then
    a' + b' = c' iff a + b = c, and all images lie strictly inside (0, 1).
    """
    m = max(abs(v) for v in inst.a + inst.b + inst.c)
    alpha = Fraction(1, 8) / (m + 1)
    beta = Fraction(1, 4)
    prov = (inst.provenance or Provenance()).extend("normalize", alpha=alpha, beta=beta)
    return ThreeSumPrimeInstance(
        a=tuple(alpha * v + beta for v in inst.a),
        b=tuple(alpha * v + beta for v in inst.b),
        c=tuple(alpha * v + 2 * beta for v in inst.c),
        provenance=prov,
    )


# ---------------------------------------------------------------------------
# EqDist

def reduce_prime_to_eqdist(inst: ThreeSumPrimeInstance) -> EqDistInstance:
    """Pair gadget: P gets {100i, 100i + 3 - c_i}, Q gets A and {3 - b}.

    Requires all values strictly inside (0, 1) (normalize first).  The scale
    separation (pairs 100 apart, within-pair differences in (2, 3), Q
    differences below 3) forces any equal difference to use one P pair and
    encode a_i + b_j = c_k.
    """
    if not inst.in_unit_interval():
        raise PreconditionViolated("reduce_prime_to_eqdist needs values in (0,1); normalize first")
    p: list[Fraction] = []
    for i, ci in enumerate(inst.c, start=1):
        p.append(Fraction(100 * i))
        p.append(100 * i + 3 - ci)
    # Q is a set union: duplicated input values must collapse, otherwise two
    # equal q entries at distinct indices pair with a p self-pair into a
    # spurious zero-difference YES.  A-values (< 1) sort before 3-b (> 2).
    q = sorted(set(inst.a)) + sorted({3 - b for b in inst.b})
    prov = (inst.provenance or Provenance()).extend("prime-to-eqdist", pair_count=inst.n)
    return EqDistInstance(p=tuple(p), q=tuple(q), provenance=prov)


def map_prime_witness_to_eqdist(witness: PairSumIdx, prime: ThreeSumPrimeInstance, eq: EqDistInstance) -> QuadIdx:
    """(i, j, k) with a_i + b_j = c_k maps to the pair-difference quad."""
    return QuadIdx(
        p1=2 * witness.k + 1,
        p2=2 * witness.k,
        q1=eq.q.index(3 - prime.b[witness.j]),
        q2=eq.q.index(prime.a[witness.i]),
    )


def solve_eqdist(inst: EqDistInstance) -> QuadIdx | None:
    """Find p[p1] - p[p2] = q[q1] - q[q2], excluding the identical-index pair.

    The only excluded combination is p1 == p2 together with q1 == q2 (the
    trivial 0 = 0).  Equal values at distinct indices are legitimate
    witnesses.  Returns the lex-min (p1, p2, q1, q2); O(n^2 + m^2) with
    hashing on exact differences.
    """
    q = inst.q
    m = len(q)
    first_any: dict[Fraction, tuple[int, int]] = {}
    first_nontrivial: dict[Fraction, tuple[int, int]] = {}
    for j1 in range(m):
        for j2 in range(m):
            d = q[j1] - q[j2]
            if d not in first_any:
                first_any[d] = (j1, j2)
            if j1 != j2 and d not in first_nontrivial:
                first_nontrivial[d] = (j1, j2)
    p = inst.p
    for i1 in range(len(p)):
        for i2 in range(len(p)):
            d = p[i1] - p[i2]
            hit = first_nontrivial.get(d) if i1 == i2 else first_any.get(d)
            if hit is not None:
                return QuadIdx(i1, i2, hit[0], hit[1])
    return None


def verify_eqdist(inst: EqDistInstance, witness: QuadIdx) -> bool:
    p1, p2, q1, q2 = witness.p1, witness.p2, witness.q1, witness.q2
    if not (0 <= p1 < len(inst.p) and 0 <= p2 < len(inst.p)):
        return False
    if not (0 <= q1 < len(inst.q) and 0 <= q2 < len(inst.q)):
        return False
    if p1 == p2 and q1 == q2:
        return False
    return inst.p[p1] - inst.p[p2] == inst.q[q1] - inst.q[q2]


# ---------------------------------------------------------------------------
# SegContPnt

def extend_to_segcontpnt(inst: EqDistInstance) -> SegContPntInstance:
    """Bracket the EqDist image with two wide padding intervals.

    Only valid on EqDist instances produced by reduce_prime_to_eqdist (the
    padding sizes depend on the pair count n >= 2 recorded in provenance):
    Q' = [-100(n-1), -94] + Q-as-points + [100, 100(n-1) + 6].
    """
    prov = inst.provenance
    if prov is None or "pair_count" not in prov.meta or (prov.chain and prov.chain[-1] != "prime-to-eqdist"):
        raise PreconditionViolated("extend_to_segcontpnt needs a prime-to-eqdist provenance")
    n = prov.meta["pair_count"]
    if n < 2:
        raise PreconditionViolated("padding intervals need pair count n >= 2")
    intervals = [Interval(Fraction(-100 * (n - 1)), Fraction(-94))]
    for v in sorted(set(inst.q)):
        intervals.append(Interval(v, v))
    intervals.append(Interval(Fraction(100), Fraction(100 * (n - 1) + 6)))
    return SegContPntInstance(
        points=inst.p,
        intervals=IntervalSet(intervals),
        provenance=prov.extend("eqdist-to-segcontpnt", pair_count=n),
    )


def solve_segcontpnt(inst: SegContPntInstance) -> Shift | None:
    """Exact containment shift, smallest feasible v.

    If any shift works, sliding left pins some point to some interval's left
    endpoint, so the minimum feasible shift is among {lo(q) - p}; testing the
    sorted candidates returns the exact minimum.
    """
    candidates = sorted({iv.lo - p for iv in inst.intervals for p in inst.points})
    for v in candidates:
        if all(inst.intervals.contains(p + v) for p in inst.points):
            return Shift(v)
    return None


def verify_segcontpnt(inst: SegContPntInstance, witness: Shift) -> bool:
    return all(inst.intervals.contains(p + witness.v) for p in inst.points)


def feasible_shifts(inst: SegContPntInstance) -> list[Interval]:
    """The exact feasible shift set as a sorted list of disjoint intervals."""
    acc: IntervalSet | None = None
    for p in inst.points:
        allowed = IntervalSet([Interval(iv.lo - p, iv.hi - p) for iv in inst.intervals])
        acc = allowed if acc is None else acc.intersect(allowed)
        if acc.is_empty():
            return []
    assert acc is not None
    return list(acc.intervals)


def infeasibility_margin(inst: SegContPntInstance) -> Fraction:
    """Exact min over shifts of max over points of distance to the union.

    Zero iff the instance is a YES.  The objective is piecewise linear in the
    shift with slopes in {-1, 0, +1}; its minimum is attained at a component
    kink (endpoint or gap midpoint pulled back by a point) or at a crossing
    of two opposite-slope pieces, which solves to the interlock value
    (e1 + e2 - p1 - p2) / 2.  All candidates are evaluated exactly.
    """
    points = inst.points
    ivs = inst.intervals
    endpoints = ivs.endpoints()
    candidates: set[Fraction] = set()
    for p in points:
        for e in endpoints:
            candidates.add(e - p)
        for gap in ivs.gaps():
            candidates.add((gap.lo + gap.hi) / 2 - p)
    anchors = [(p, e) for p in points for e in endpoints]
    for a in range(len(anchors)):
        p1, e1 = anchors[a]
        for b in range(a + 1, len(anchors)):
            p2, e2 = anchors[b]
            candidates.add((e1 + e2 - p1 - p2) / 2)
    best: Fraction | None = None
    for v in candidates:
        worst = max(ivs.distance(p + v) for p in points)
        if best is None or worst < best:
            best = worst
    assert best is not None
    return best


def one_dim_slack(inst: SegContPntInstance) -> tuple[bool, Fraction]:
    """(answer, slack): for YES the half-length of the widest feasible shift
    interval; for NO the exact infeasibility margin.  Slack 0 means the
    instance is decided only by a boundary contact."""
    feas = feasible_shifts(inst)
    if feas:
        return True, max(iv.length for iv in feas) / 2
    return False, infeasibility_margin(inst)

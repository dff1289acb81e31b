"""Seeded instance generation for the four serializable problem kinds.

Modes: planted-yes embeds a recorded witness, random makes no promise, and
adversarial-no rejection-samples until the reference answer is NO (brute
oracle up to the quartic cutoff, the scanning solver above it).  Everything
is driven by a string-seeded Random so identical (kind, n, mode, seed) calls
produce byte-identical files on any interpreter.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .config import Config
from .errors import BoundsExceeded, PreconditionViolated
from .geometry import Interval, IntervalSet
from .instances import (
    EqDistInstance,
    Provenance,
    SegContPntInstance,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
)
from .linear import solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt
from .oracles import brute_3sum, brute_3sum_prime, brute_eqdist, brute_segcontpnt

MODES = ("planted-yes", "random", "adversarial-no")
BOUNDS = {
    "3sum": (1, 100_000),
    "3sum-prime": (1, 100_000),
    "eqdist": (1, 20_000),
    "segcontpnt": (1, 20_000),
}
_DENOMS = (1, 1, 2, 3, 4)  # small denominators keep files and oracles cheap
_REJECTION_CAP = 500


def _rng(kind: str, n: int, mode: str, seed: int) -> random.Random:
    # string seeding is deterministic across processes; tuple seeding is not
    return random.Random(f"{kind}|{n}|{mode}|{seed}")


def _rat(rng: random.Random, span: int) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(_DENOMS))


def _base_meta(mode: str, seed: int, n: int, **extra) -> Provenance:
    meta = {"generator": mode, "seed": seed, "size": n}
    meta.update(extra)
    return Provenance((), meta)


def generate(kind: str, n: int, mode: str, seed: int, config: Config | None = None):
    """Deterministic instance of the given kind and size; see module doc."""
    if kind not in BOUNDS:
        raise PreconditionViolated(f"unknown kind {kind!r}")
    if mode not in MODES:
        raise PreconditionViolated(f"unknown mode {mode!r}")
    lo, hi = BOUNDS[kind]
    if not lo <= n <= hi:
        raise BoundsExceeded(f"{kind} size {n} outside [{lo}, {hi}]")
    cfg = config or Config()
    rng = _rng(kind, n, mode, seed)
    builder = {
        "3sum": _gen_3sum,
        "3sum-prime": _gen_3sum_prime,
        "eqdist": _gen_eqdist,
        "segcontpnt": _gen_segcontpnt,
    }[kind]
    return builder(rng, n, mode, seed, cfg)


def _reject(make, is_no, cap: int = _REJECTION_CAP):
    for _ in range(cap):
        inst = make()
        if is_no(inst):
            return inst
    raise BoundsExceeded("could not sample a NO instance within the attempt cap")


def _gen_3sum(rng, n, mode, seed, cfg):
    span = 20 * n

    def sample(values=None):
        vals = values or [_rat(rng, span) for _ in range(n)]
        return ThreeSumInstance(tuple(vals), provenance=_base_meta(mode, seed, n))

    if mode == "planted-yes":
        vals = [_rat(rng, span) for _ in range(n)]
        if n >= 3:
            i, j, k = rng.sample(range(n), 3)
        else:
            i = j = k = 0  # repeats allowed; a + a + a = 0 forces a zero entry
            vals[0] = Fraction(0)
        vals[k] = -(vals[i] + vals[j])
        inst = ThreeSumInstance(tuple(vals), provenance=_base_meta(mode, seed, n, planted=(i, j, k)))
        return inst
    if mode == "random":
        return sample()
    use_brute = n <= cfg.oracle_cubic_max
    return _reject(sample, lambda i: (brute_3sum(i) if use_brute else solve_3sum(i)) is None)


def _gen_3sum_prime(rng, n, mode, seed, cfg):
    span = 20 * n

    def sample():
        a = [_rat(rng, span) for _ in range(n)]
        b = [_rat(rng, span) for _ in range(n)]
        c = [_rat(rng, span) for _ in range(n)]
        return a, b, c

    if mode == "planted-yes":
        a, b, c = sample()
        i, j, k = (rng.randrange(n) for _ in range(3))
        c[k] = a[i] + b[j]
        return ThreeSumPrimeInstance(
            tuple(a), tuple(b), tuple(c), provenance=_base_meta(mode, seed, n, planted=(i, j, k))
        )

    def make():
        a, b, c = sample()
        return ThreeSumPrimeInstance(tuple(a), tuple(b), tuple(c), provenance=_base_meta(mode, seed, n))

    if mode == "random":
        return make()
    use_brute = n <= cfg.oracle_cubic_max
    return _reject(make, lambda i: (brute_3sum_prime(i) if use_brute else solve_3sum_prime(i)) is None)


def _gen_eqdist(rng, n, mode, seed, cfg):
    span = 20 * n

    def make():
        p = [_rat(rng, span) for _ in range(max(n, 2))]
        q = [_rat(rng, span) for _ in range(max(n, 2))]
        return EqDistInstance(tuple(p), tuple(q), provenance=_base_meta(mode, seed, n))

    if mode == "planted-yes":
        p = [_rat(rng, span) for _ in range(max(n, 2))]
        q = [_rat(rng, span) for _ in range(max(n, 2))]
        i1, i2 = rng.sample(range(len(p)), 2)
        j1 = rng.randrange(len(q))
        j2 = rng.randrange(len(q))
        q = list(q)
        # force q[j1] - q[j2] = p[i1] - p[i2] with i1 != i2, so the quad is nontrivial
        if j1 == j2:
            j2 = (j1 + 1) % len(q)
        q[j1] = q[j2] + (p[i1] - p[i2])
        return EqDistInstance(
            tuple(p), tuple(q), provenance=_base_meta(mode, seed, n, planted=(i1, i2, j1, j2))
        )
    if mode == "random":
        return make()
    use_brute = max(n, 2) <= cfg.oracle_quartic_max
    return _reject(make, lambda i: (brute_eqdist(i) if use_brute else solve_eqdist(i)) is None)


def _gen_segcontpnt(rng, n, mode, seed, cfg):
    def intervals_for(m: int) -> IntervalSet:
        # m disjoint intervals on a 6m-long lattice, gaps guaranteed
        cells = rng.sample(range(2 * m), m)
        out = []
        for c in sorted(cells):
            base = Fraction(3 * c)
            width = Fraction(rng.randint(0, 4), rng.choice(_DENOMS))
            out.append(Interval(base, base + min(width, Fraction(2))))
        return IntervalSet(out)

    def make():
        ivs = intervals_for(max(n, 1))
        pts: set[Fraction] = set()
        while len(pts) < n:
            pts.add(_rat(rng, 6 * max(n, 1)))
        return SegContPntInstance(
            points=tuple(sorted(pts)), intervals=ivs, provenance=_base_meta(mode, seed, n)
        )

    if mode == "planted-yes":
        ivs = intervals_for(max(n, 1))
        shift = _rat(rng, 5)
        pts = set()
        members = list(ivs.intervals)
        while len(pts) < n:
            iv = rng.choice(members)
            width = iv.hi - iv.lo
            frac = Fraction(rng.randint(0, 8), 8)
            pts.add(iv.lo + width * frac - shift)
        inst = SegContPntInstance(
            points=tuple(sorted(pts)),
            intervals=ivs,
            provenance=_base_meta(mode, seed, n, planted_shift=shift),
        )
        return inst
    if mode == "random":
        return make()
    use_brute = n <= cfg.oracle_cubic_max
    return _reject(make, lambda i: (brute_segcontpnt(i) if use_brute else solve_segcontpnt(i)) is None)

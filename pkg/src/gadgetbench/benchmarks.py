"""Wall-clock scaling probes for the solvers, with CSV emission.

Instances are all-NO by construction (sums that cannot vanish, difference
sets that cannot collide), so no solver exits early and the measured work is
the full scan.  One warm-up run per size is discarded; the record keeps the
median and the minimum of the remaining repetitions.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import DegenerateInput, PreconditionViolated
from .geometry import Interval, IntervalSet
from .instances import (
    EqDistInstance,
    SegContPntInstance,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
)
from .linear import solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt
from .oracles import brute_3sum


@dataclass(frozen=True)
class BenchRecord:
    solver: str
    n: int
    median_ns: int
    min_ns: int
    reps: int

    def __post_init__(self) -> None:
        if self.reps < 3:
            raise DegenerateInput("bench records need at least 3 repetitions")


def _no_3sum(n: int, rng: random.Random) -> ThreeSumInstance:
    values = list(range(1, n + 1))  # positive: no triple can sum to zero
    rng.shuffle(values)
    return ThreeSumInstance(tuple(Fraction(v) for v in values))


def _no_3sum_prime(n: int, rng: random.Random) -> ThreeSumPrimeInstance:
    a = [Fraction(i) for i in range(1, n + 1)]
    b = [Fraction(i) for i in range(1, n + 1)]
    c = [Fraction(-i) for i in range(1, n + 1)]  # a + b >= 2 > 0 > every c
    for side in (a, b, c):
        rng.shuffle(side)
    return ThreeSumPrimeInstance(tuple(a), tuple(b), tuple(c))


def _no_eqdist(n: int, rng: random.Random) -> EqDistInstance:
    m = max(n, 2)
    p = [Fraction(i) for i in range(m)]
    q = [Fraction(i * m * m) for i in range(m)]  # q gaps dwarf every p gap
    rng.shuffle(p)
    rng.shuffle(q)
    return EqDistInstance(tuple(p), tuple(q))


def _no_segcontpnt(n: int, rng: random.Random) -> SegContPntInstance:
    m = max(n, 2)
    points = tuple(Fraction(3 * i) for i in range(m))
    # half-width teeth on a stride-4 lattice: offsets mod 4 would need both
    # s and s+3 in [0, 1/2], impossible, so every shift fails
    intervals = IntervalSet([Interval(Fraction(4 * i), Fraction(8 * i + 1, 2)) for i in range(m)])
    return SegContPntInstance(points=points, intervals=intervals)


SOLVERS = {
    "solve_3sum": (_no_3sum, solve_3sum),
    "brute_3sum": (_no_3sum, brute_3sum),
    "solve_3sum_prime": (_no_3sum_prime, solve_3sum_prime),
    "solve_eqdist": (_no_eqdist, solve_eqdist),
    "solve_segcontpnt": (_no_segcontpnt, solve_segcontpnt),
}


def bench(solver: str, sizes, reps: int = 5, seed: int = 0) -> list[BenchRecord]:
    if solver not in SOLVERS:
        raise PreconditionViolated(f"unknown solver {solver!r}; known: {sorted(SOLVERS)}")
    sizes = list(sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise PreconditionViolated("sizes must be strictly increasing")
    if reps < 3:
        raise PreconditionViolated("need at least 3 repetitions")
    build, run = SOLVERS[solver]
    records = []
    for n in sizes:
        inst = build(n, random.Random(f"bench|{solver}|{n}|{seed}"))
        run(inst)  # warm-up, discarded
        times = []
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            run(inst)
            times.append(time.perf_counter_ns() - t0)
        records.append(
            BenchRecord(solver=solver, n=n, median_ns=int(statistics.median(times)), min_ns=min(times), reps=reps)
        )
    return records


def doubling_ratios(records: list[BenchRecord]) -> list[float]:
    """Median-time ratios of consecutive sizes; the empirical exponent probe."""
    return [b.median_ns / a.median_ns for a, b in zip(records, records[1:])]


def write_csv(records: list[BenchRecord], path: str | Path) -> None:
    lines = ["solver,n,median_ns,min_ns,reps"]
    lines += [f"{r.solver},{r.n},{r.median_ns},{r.min_ns},{r.reps}" for r in records]
    Path(path).write_text("\n".join(lines) + "\n")


def read_csv(path: str | Path) -> list[BenchRecord]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != "solver,n,median_ns,min_ns,reps":
        raise PreconditionViolated(f"{path}: not a bench CSV")
    out = []
    for line in lines[1:]:
        solver, n, med, mn, reps = line.split(",")
        out.append(BenchRecord(solver, int(n), int(med), int(mn), int(reps)))
    return out

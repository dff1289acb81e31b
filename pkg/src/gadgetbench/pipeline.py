"""Reduction chains, per-stage solving, and oracle-equivalence audits.

A chain is a path in the reduction DAG.  run_pipeline solves the input, then
applies each step and solves what comes out, recording per stage the solver
answer, the witness and its verifier result, and (when the size is under the
configured cutoff) the brute-oracle answer.  A record agrees when all solver
answers along the chain are equal and defined, every non-skipped oracle
matches its stage, and no YES witness fails verification.

Terminal gadget stages (comb pair, wedge pair, four-line sets) have no brute
oracle of their own; the adjacent 1-D stage plays that role through the
agreement flag.  The rigid and rotation stages can return UNCERTAIN, which
never counts as agreement.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .combs import build_comb_pair
from .config import Config
from .containment import polygon_contains_at, solve_polycont
from .errors import BudgetExceeded, ChainInvalid
from .files import kind_of
from .hausdorff import certify_threshold, reduce_to_hausdorff
from .instances import SegContPntInstance
from .linear import (
    extend_to_segcontpnt,
    normalize_to_unit_interval,
    reduce_3sum_to_prime,
    reduce_prime_to_3sum,
    reduce_prime_to_eqdist,
    solve_3sum,
    solve_3sum_prime,
    solve_eqdist,
    solve_segcontpnt,
    verify_3sum,
    verify_3sum_prime,
    verify_eqdist,
    verify_segcontpnt,
)
from .oracles import brute_3sum, brute_3sum_prime, brute_eqdist, brute_segcontpnt
from .rotation import solve_rigid, solve_rotation, verify_rotation_angle, wedges_from_instance


@dataclass(frozen=True)
class Step:
    name: str
    source: str
    target: str
    apply: Callable


STEPS: dict[str, Step] = {
    s.name: s
    for s in (
        Step("3sum-to-prime", "3sum", "3sum-prime", reduce_3sum_to_prime),
        Step("prime-to-3sum", "3sum-prime", "3sum", reduce_prime_to_3sum),
        Step("normalize", "3sum-prime", "3sum-prime", normalize_to_unit_interval),
        Step("prime-to-eqdist", "3sum-prime", "eqdist", reduce_prime_to_eqdist),
        Step("eqdist-to-segcontpnt", "eqdist", "segcontpnt", extend_to_segcontpnt),
        Step("segcontpnt-to-polycont", "segcontpnt", "polycont", build_comb_pair),
        Step("segcontpnt-to-rotation", "segcontpnt", "rotation", lambda i: wedges_from_instance(i)[:2]),
        Step("segcontpnt-to-rigid", "segcontpnt", "rigid", lambda i: wedges_from_instance(i)[:2]),
        Step("segcontpnt-to-hausdorff", "segcontpnt", "hausdorff", reduce_to_hausdorff),
    )
}

# canonical chain from a normalized 3SUM' instance down to the 1-D core
CHAIN_TO_SEGCONTPNT = ("normalize", "prime-to-eqdist", "eqdist-to-segcontpnt")


@dataclass(frozen=True)
class StageRecord:
    kind: str
    answer: bool | None  # None encodes UNCERTAIN / undecided
    witness: str | None
    witness_ok: bool | None
    oracle_answer: bool | None
    oracle_skipped: bool
    note: str = ""


@dataclass(frozen=True)
class InstanceAudit:
    instance_id: str
    stages: tuple[StageRecord, ...]

    @property
    def agreement(self) -> bool:
        answers = [s.answer for s in self.stages]
        if not answers or any(a is None for a in answers):
            return False
        if any(a != answers[0] for a in answers):
            return False
        for s in self.stages:
            if not s.oracle_skipped and s.oracle_answer != s.answer:
                return False
            if s.witness_ok is False:
                return False
        return True


@dataclass(frozen=True)
class AuditReport:
    records: tuple[InstanceAudit, ...]

    @property
    def disagreements(self) -> int:
        return sum(1 for r in self.records if not r.agreement)

    def summary(self) -> dict:
        uncertain = sum(1 for r in self.records for s in r.stages if s.answer is None)
        skipped = sum(1 for r in self.records for s in r.stages if s.oracle_skipped)
        return {
            "instances": len(self.records),
            "agree": len(self.records) - self.disagreements,
            "disagree": self.disagreements,
            "uncertain_stages": uncertain,
            "oracle_skipped_stages": skipped,
        }


def _stage_linear(kind, obj, cfg: Config) -> StageRecord:
    solvers = {
        "3sum": (solve_3sum, verify_3sum, brute_3sum, lambda o: o.n, cfg.oracle_cubic_max),
        "3sum-prime": (solve_3sum_prime, verify_3sum_prime, brute_3sum_prime, lambda o: len(o.a), cfg.oracle_cubic_max),
        "eqdist": (solve_eqdist, verify_eqdist, brute_eqdist, lambda o: max(len(o.p), len(o.q)), cfg.oracle_quartic_max),
        "segcontpnt": (solve_segcontpnt, verify_segcontpnt, brute_segcontpnt, lambda o: len(o.points) + len(o.intervals), cfg.oracle_cubic_max),
    }
    solve, verify, brute, size, cutoff = solvers[kind]
    w = solve(obj)
    answer = w is not None
    witness_ok = verify(obj, w) if w is not None else None
    if size(obj) <= cutoff:
        oracle = brute(obj)
        return StageRecord(kind, answer, repr(w) if w else None, witness_ok, oracle is not None, False)
    return StageRecord(kind, answer, repr(w) if w else None, witness_ok, None, True, note="oracle skipped: size over cutoff")


def _stage_polycont(pair, cfg: Config) -> StageRecord:
    w = solve_polycont(pair.inner, pair.outer)
    if w is None:
        return StageRecord("polycont", False, None, None, None, True)
    ok = polygon_contains_at(pair.inner, w.t, pair.outer)
    note = "" if w.t.y == 0 else f"witness v != 0: {w.t.y}"
    return StageRecord("polycont", True, repr(w.t), ok, None, True, note=note)


def _stage_wedges(kind, wedges, cfg: Config) -> StageRecord:
    inner, outer = wedges
    verdict = solve_rigid(inner, outer) if kind == "rigid" else solve_rotation(inner, outer)
    answer = {"yes": True, "no": False, "uncertain": None}[verdict.answer]
    witness_ok = None
    if verdict.answer == "yes":
        witness_ok = verify_rotation_angle(inner, outer, verdict.witness_angle)
    return StageRecord(
        kind, answer,
        None if verdict.witness_angle is None else f"{verdict.witness_angle!r}",
        witness_ok, None, True,
        note=f"margin={verdict.margin:.3e}",
    )


def _stage_hausdorff(gadget, source: SegContPntInstance, cfg: Config) -> StageRecord:
    a, b, eps = gadget
    try:
        bounds = certify_threshold(a, b, eps, cell_limit=cfg.cell_limit)
        e = float(eps.epsilon)
        if bounds.upper < e:
            return StageRecord("hausdorff", True, None, None, None, True, note=f"upper={bounds.upper:.3e}")
        if bounds.lower >= e:
            return StageRecord("hausdorff", False, None, None, None, True, note=f"lower={bounds.lower:.3e}")
        return StageRecord("hausdorff", None, None, None, None, True, note="bounds straddle epsilon")
    except BudgetExceeded:
        # epsilon too small for a grid; the exact 1-D solver is the only
        # rigorous route left and doubles as the answer (upper bounds only)
        answer = solve_segcontpnt(source) is not None
        return StageRecord("hausdorff", answer, None, None, None, True, note="exact-1d fallback: grid over budget")


def run_pipeline(instance, chain, config: Config | None = None, instance_id: str = "instance-0") -> AuditReport:
    """Solve the instance, apply each chain step, solve the results; one
    InstanceAudit wrapped in an AuditReport.  Raises ChainInvalid when the
    chain is not a DAG path starting at the instance's kind."""
    cfg = config or Config()
    kind = kind_of(instance)
    stages = [_stage_linear(kind, instance, cfg)]
    current, current_kind = instance, kind
    last_1d: SegContPntInstance | None = instance if kind == "segcontpnt" else None
    for name in chain:
        step = STEPS.get(name)
        if step is None:
            raise ChainInvalid(f"unknown step {name!r}")
        if step.source != current_kind:
            raise ChainInvalid(f"step {name!r} expects {step.source!r}, have {current_kind!r}")
        current = step.apply(current)
        current_kind = step.target
        if current_kind in ("3sum", "3sum-prime", "eqdist", "segcontpnt"):
            stages.append(_stage_linear(current_kind, current, cfg))
            if current_kind == "segcontpnt":
                last_1d = current
        elif current_kind == "polycont":
            stages.append(_stage_polycont(current, cfg))
        elif current_kind in ("rotation", "rigid"):
            stages.append(_stage_wedges(current_kind, current, cfg))
        else:
            assert current_kind == "hausdorff"
            assert last_1d is not None
            stages.append(_stage_hausdorff(current, last_1d, cfg))
    return AuditReport((InstanceAudit(instance_id, tuple(stages)),))


def audit_batch(instances, chain, config: Config | None = None, workers: int | None = None) -> AuditReport:
    """Audit many instances concurrently; records merged by instance id.

    ``instances`` is a list of bare instances or (id, instance) pairs; bare
    instances get zero-padded positional ids so merge order is total.
    """
    cfg = config or Config()
    pairs = []
    for i, item in enumerate(instances):
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], str):
            pairs.append(item)
        else:
            pairs.append((f"i{i:06d}", item))

    def run(pair):
        iid, inst = pair
        return run_pipeline(inst, chain, cfg, instance_id=iid).records[0]

    n_workers = workers or cfg.audit_workers or 8
    if n_workers <= 1 or len(pairs) <= 1:
        records = [run(p) for p in pairs]
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            records = list(pool.map(run, pairs))
    return AuditReport(tuple(sorted(records, key=lambda r: r.instance_id)))

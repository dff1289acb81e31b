"""Command-line workbench.

Verbs: gen, reduce, solve, audit, bench, render.  Global flags --seed,
--config, --out.  Exit codes: 0 success, 1 audit found a disagreement,
2 input error (bad file, bad arguments, failed validation).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import benchmarks, figures, files, generators, pipeline
from .combs import build_comb_pair
from .config import Config, load_config
from .containment import solve_polycont
from .errors import BudgetExceeded, DegenerateInput, GadgetbenchError
from .hausdorff import decide_threshold, reduce_to_hausdorff
from .instances import SegContPntInstance
from .linear import (
    solve_3sum,
    solve_3sum_prime,
    solve_eqdist,
    solve_segcontpnt,
)
from .rotation import solve_rigid, solve_rotation, wedges_from_instance

GADGETS = ("polycont", "rotation", "rigid", "hausdorff")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="deterministic seed (gen, bench)")
    common.add_argument("--config", type=Path, default=None, help="key=value config file")
    common.add_argument("--out", type=Path, default=None, help="output file or directory")

    p = argparse.ArgumentParser(prog="gadgetbench", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a seeded instance file")
    g.add_argument("--kind", required=True, choices=files.KINDS)
    g.add_argument("--n", required=True, type=int)
    g.add_argument("--mode", default="random", choices=generators.MODES)

    r = sub.add_parser("reduce", parents=[common], help="apply one reduction step to an instance file")
    r.add_argument("input", type=Path)
    r.add_argument("--step", required=True, choices=sorted(pipeline.STEPS))

    s = sub.add_parser("solve", parents=[common], help="solve an instance file, optionally via a gadget")
    s.add_argument("input", type=Path)
    s.add_argument("--via", choices=GADGETS, default=None,
                   help="build this gadget from a segcontpnt instance and solve it")

    a = sub.add_parser("audit", parents=[common], help="run instance files through a chain and compare answers")
    a.add_argument("inputs", type=Path, nargs="+")
    a.add_argument("--chain", required=True, help="comma-separated step names")

    b = sub.add_parser("bench", parents=[common], help="time a solver across sizes; CSV plus PNG")
    b.add_argument("--solver", required=True, choices=sorted(benchmarks.SOLVERS))
    b.add_argument("--sizes", required=True, help="comma-separated, strictly increasing")
    b.add_argument("--reps", type=int, default=5)

    v = sub.add_parser("render", parents=[common], help="render a gadget figure as SVG")
    v.add_argument("input", type=Path)
    v.add_argument("--what", required=True, choices=("comb", "wedges", "hausdorff"))

    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _require_segcontpnt(inst) -> SegContPntInstance:
    if not isinstance(inst, SegContPntInstance):
        raise GadgetbenchError("this operation needs a segcontpnt instance")
    return inst


def _cmd_gen(args, cfg: Config) -> int:
    inst = generators.generate(args.kind, args.n, args.mode, args.seed, cfg)
    _emit(files.dumps(inst), args.out)
    return 0


def _cmd_reduce(args, cfg: Config) -> int:
    inst = files.read_instance(args.input)
    step = pipeline.STEPS[args.step]
    have = files.kind_of(inst)
    if step.source != have:
        raise GadgetbenchError(f"step {args.step!r} expects {step.source!r}, file holds {have!r}")
    if step.target in GADGETS:
        raise GadgetbenchError(
            f"step {args.step!r} produces a {step.target} gadget, which has no instance-file form; "
            "use `solve --via` or `render` instead"
        )
    _emit(files.dumps(step.apply(inst)), args.out)
    return 0


def _cmd_solve(args, cfg: Config) -> int:
    inst = files.read_instance(args.input)
    if args.via is not None:
        inst = _require_segcontpnt(inst)
        if args.via == "polycont":
            pair = build_comb_pair(inst)
            w = solve_polycont(pair.inner, pair.outer)
            print(f"answer: {'yes' if w else 'no'}")
            if w:
                print(f"witness: t=({w.t.x}, {w.t.y})")
        elif args.via in ("rotation", "rigid"):
            try:
                wi, wo, _ = wedges_from_instance(inst)
            except DegenerateInput:
                # Deep reduction chains pin the shift to one point; the wedge
                # arcs then collapse in doubles.  The 1-D question is exact.
                w = solve_segcontpnt(inst)
                print(f"answer: {'yes' if w is not None else 'no'}")
                print("note: wedge arcs collapse in doubles, answer from exact shift search")
                return 0
            verdict = solve_rigid(wi, wo) if args.via == "rigid" else solve_rotation(wi, wo)
            print(f"answer: {verdict.answer}")
            print(f"margin: {verdict.margin:.6e}")
            if verdict.witness_angle is not None:
                print(f"witness: angle={verdict.witness_angle!r}")
        else:
            try:
                decision = decide_threshold(inst, cell_limit=cfg.cell_limit)
            except BudgetExceeded:
                # Deep reduction chains shrink epsilon past any usable grid
                # resolution; the one-dimensional question is still exact.
                w = solve_segcontpnt(inst)
                print(f"answer: {'yes' if w is not None else 'no'}")
                print("note: grid over cell budget, answer from exact shift search")
                return 0
            label = {True: "yes", False: "no", None: "uncertain"}[decision.answer]
            print(f"answer: {label}")
            print(f"bounds: [{decision.bounds.lower:.6e}, {decision.bounds.upper:.6e}]")
            print(f"epsilon: {decision.eps.epsilon}")
            if args.out is not None:
                args.out.write_text(
                    files.certification_report(
                        decision.bounds, decision.eps, decision.grid_step, decision.search_box
                    )
                )
        return 0

    kind = files.kind_of(inst)
    solver = {
        "3sum": solve_3sum,
        "3sum-prime": solve_3sum_prime,
        "eqdist": solve_eqdist,
        "segcontpnt": solve_segcontpnt,
    }[kind]
    w = solver(inst)
    print(f"answer: {'yes' if w is not None else 'no'}")
    if w is not None:
        print(f"witness: {w}")
    return 0


def _cmd_audit(args, cfg: Config) -> int:
    chain = [c for c in args.chain.split(",") if c]
    instances = [(path.name, files.read_instance(path)) for path in args.inputs]
    report = pipeline.audit_batch(instances, chain, cfg)
    for rec in report.records:
        answers = " ".join(
            f"{s.kind}={'?' if s.answer is None else 'yes' if s.answer else 'no'}" for s in rec.stages
        )
        flag = "ok" if rec.agreement else "DISAGREE"
        print(f"{rec.instance_id}: {flag}  {answers}")
    summary = report.summary()
    print(json.dumps(summary))
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        rows = ["instance_id,stage,kind,answer,oracle_answer,oracle_skipped,witness_ok,note"]
        for rec in report.records:
            for i, s in enumerate(rec.stages):
                rows.append(
                    f"{rec.instance_id},{i},{s.kind},{_tri(s.answer)},{_tri(s.oracle_answer)},"
                    f"{int(s.oracle_skipped)},{_tri(s.witness_ok)},{s.note.replace(',', ';')}"
                )
        (args.out / "report.csv").write_text("\n".join(rows) + "\n")
        (args.out / "report.json").write_text(json.dumps(summary, sort_keys=True) + "\n")
        figures.audit_plot(report, args.out / "report.png")
    return 1 if report.disagreements else 0


def _tri(v: bool | None) -> str:
    return "" if v is None else ("1" if v else "0")


def _cmd_bench(args, cfg: Config) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    records = benchmarks.bench(args.solver, sizes, reps=args.reps, seed=args.seed)
    for r in records:
        print(f"{r.solver} n={r.n} median={r.median_ns / 1e6:.3f}ms min={r.min_ns / 1e6:.3f}ms reps={r.reps}")
    for ratio in benchmarks.doubling_ratios(records):
        print(f"doubling ratio: {ratio:.2f}")
    out = args.out or Path("bench.csv")
    benchmarks.write_csv(records, out)
    figures.bench_plot(records, out.with_suffix(".png"))
    return 0


def _cmd_render(args, cfg: Config) -> int:
    inst = _require_segcontpnt(files.read_instance(args.input))
    out = args.out or Path(f"{args.what}.svg")
    if args.what == "comb":
        figures.render_comb(build_comb_pair(inst), out)
    elif args.what == "wedges":
        wi, wo, _ = wedges_from_instance(inst)
        figures.render_wedges(wi, wo, out)
    else:
        a, b, eps = reduce_to_hausdorff(inst)
        figures.render_hausdorff_gadget(a, b, eps, out)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else Config()
        handler = {
            "gen": _cmd_gen,
            "reduce": _cmd_reduce,
            "solve": _cmd_solve,
            "audit": _cmd_audit,
            "bench": _cmd_bench,
            "render": _cmd_render,
        }[args.verb]
        return handler(args, cfg)
    except (GadgetbenchError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

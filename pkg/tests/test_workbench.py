"""File formats, generators, audit pipeline, benchmarks, figures, config."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from gadgetbench import benchmarks, files, figures, generators, pipeline
from gadgetbench.combs import build_comb_pair
from gadgetbench.config import Config, load_config
from gadgetbench.errors import BoundsExceeded, ChainInvalid, DegenerateInput, PreconditionViolated
from gadgetbench.geometry import Interval, IntervalSet
from gadgetbench.hausdorff import reduce_to_hausdorff
from gadgetbench.instances import Provenance, SegContPntInstance, ThreeSumPrimeInstance
from gadgetbench.linear import solve_3sum_prime, solve_segcontpnt
from gadgetbench.rationals import rat
from gadgetbench.rotation import wedges_from_instance


def iv(lo, hi) -> Interval:
    return Interval(rat(lo), rat(hi))


# ----------------------------------------------------------------------- files

def sample_instances():
    prov = Provenance(("made-up",), {"alpha": Fraction(3, 7), "pair": (1, 2)})
    yield files.loads(files.dumps(generators.generate("3sum", 4, "planted-yes", 1)))
    yield ThreeSumPrimeInstance((rat(1),), (rat(2),), (rat(3),), provenance=prov)
    yield generators.generate("eqdist", 3, "random", 5)
    yield SegContPntInstance((rat(0), rat("1/2")), IntervalSet([iv(0, "1/4"), iv("1/2", 1)]), provenance=prov)


def test_files_round_trip_all_kinds():
    for inst in sample_instances():
        back = files.loads(files.dumps(inst))
        assert back == inst
        assert files.kind_of(back) == files.kind_of(inst)


def test_files_output_is_canonical_and_stable():
    inst = generators.generate("segcontpnt", 3, "planted-yes", 9)
    text = files.dumps(inst)
    assert text.endswith("\n")
    assert text == files.dumps(files.loads(text))  # byte-identical round trip
    obj = json.loads(text)
    assert list(obj) == sorted(obj)
    assert ": " not in text.strip()  # compact separators


def test_files_rationals_encoded_as_strings():
    inst = SegContPntInstance((rat("1/3"),), IntervalSet([iv(0, "2/3")]))
    obj = json.loads(files.dumps(inst))
    assert obj["payload"]["points"] == ["1/3"]
    assert obj["payload"]["intervals"] == [["0", "2/3"]]


def test_files_write_read(tmp_path: Path):
    path = tmp_path / "inst.json"
    inst = generators.generate("3sum-prime", 3, "adversarial-no", 2)
    files.write_instance(path, inst)
    assert files.read_instance(path) == inst


def test_files_rejects_malformed_input():
    with pytest.raises(PreconditionViolated):
        files.loads('{"kind": "3sum"}\n')
    with pytest.raises(PreconditionViolated):
        files.loads('{"kind": "nope", "payload": {}, "provenance": null}\n')
    with pytest.raises(PreconditionViolated):
        files.loads("not json at all")


def test_segmentset_file_round_trip():
    inst = SegContPntInstance((rat(0), rat("1/2")), IntervalSet([iv("1/4", "3/4")]))
    a, b, _ = reduce_to_hausdorff(inst)
    for s in (a, b):
        back = files.loads_segmentset(files.dumps_segmentset(s))
        assert back == s


# ------------------------------------------------------------------ generators

def test_generators_deterministic_per_seed():
    for kind in files.KINDS:
        one = generators.generate(kind, 4, "planted-yes", 123)
        two = generators.generate(kind, 4, "planted-yes", 123)
        other = generators.generate(kind, 4, "planted-yes", 124)
        assert one == two
        assert one != other


def test_generators_planted_yes_and_adversarial_no():
    for seed in range(12):
        p = generators.generate("3sum-prime", 5, "planted-yes", seed)
        assert solve_3sum_prime(p) is not None
        n = generators.generate("3sum-prime", 5, "adversarial-no", seed)
        assert solve_3sum_prime(n) is None
        sp = generators.generate("segcontpnt", 4, "planted-yes", seed)
        assert solve_segcontpnt(sp) is not None
        sn = generators.generate("segcontpnt", 4, "adversarial-no", seed)
        assert solve_segcontpnt(sn) is None


def test_generators_record_mode_and_seed():
    inst = generators.generate("eqdist", 4, "random", 77)
    assert inst.provenance.meta["seed"] == 77
    assert inst.provenance.meta["generator"] == "random"
    assert inst.provenance.meta["size"] == 4


def test_generators_reject_out_of_range_sizes():
    with pytest.raises(BoundsExceeded):
        generators.generate("3sum", 0, "random", 1)
    with pytest.raises(BoundsExceeded):
        generators.generate("segcontpnt", 10**9, "random", 1)
    with pytest.raises(PreconditionViolated):
        generators.generate("3sum", 5, "no-such-mode", 1)


# -------------------------------------------------------------------- pipeline

CHAIN = ["normalize", "prime-to-eqdist", "eqdist-to-segcontpnt"]


def test_run_pipeline_tracks_all_stages():
    inst = generators.generate("3sum-prime", 4, "planted-yes", 5)
    report = pipeline.run_pipeline(inst, CHAIN)
    assert len(report.records) == 1
    rec = report.records[0]
    assert [s.kind for s in rec.stages] == ["3sum-prime", "3sum-prime", "eqdist", "segcontpnt"]
    assert rec.agreement
    assert all(s.answer is True for s in rec.stages)


def test_run_pipeline_no_instance_agrees():
    inst = generators.generate("3sum-prime", 4, "adversarial-no", 6)
    rec = pipeline.run_pipeline(inst, CHAIN).records[0]
    assert rec.agreement
    assert all(s.answer is False for s in rec.stages)


def test_run_pipeline_gadget_tails_on_chain_image():
    # chain images certify exactly via polygons; hausdorff falls back to the
    # exact 1-D answer because epsilon collapses under the chained denominators
    inst = generators.generate("3sum-prime", 2, "planted-yes", 3)
    for tail in ("segcontpnt-to-polycont", "segcontpnt-to-hausdorff"):
        rec = pipeline.run_pipeline(inst, CHAIN + [tail]).records[0]
        assert rec.agreement, (tail, rec)


def test_run_pipeline_rotation_tails_need_slack():
    # chain images pin the shift exactly (zero slack), so the float sweep
    # reports UNCERTAIN there; a slack instance decides cleanly
    from gadgetbench.geometry import Interval, IntervalSet

    chained = generators.generate("3sum-prime", 2, "planted-yes", 3)
    rec = pipeline.run_pipeline(chained, CHAIN + ["segcontpnt-to-rotation"]).records[0]
    assert rec.stages[-1].answer is None

    wide = SegContPntInstance((rat("1/2"),), IntervalSet([Interval(rat("1/4"), rat("3/4"))]))
    for tail in ("segcontpnt-to-rotation", "segcontpnt-to-rigid"):
        rec = pipeline.run_pipeline(wide, [tail]).records[0]
        assert rec.agreement, (tail, rec)
        assert rec.stages[-1].answer is True


def test_run_pipeline_rejects_bad_chains():
    inst = generators.generate("3sum-prime", 3, "random", 1)
    with pytest.raises(ChainInvalid):
        pipeline.run_pipeline(inst, ["no-such-step"])
    with pytest.raises(ChainInvalid):
        pipeline.run_pipeline(inst, ["eqdist-to-segcontpnt"])  # wrong source kind


def test_audit_batch_parallel_matches_serial():
    instances = [
        (f"case{i}", generators.generate("3sum-prime", 3, "planted-yes" if i % 2 else "adversarial-no", i))
        for i in range(8)
    ]
    serial = pipeline.audit_batch(instances, CHAIN, workers=1)
    parallel = pipeline.audit_batch(instances, CHAIN, workers=4)
    assert serial.records == parallel.records
    assert serial.disagreements == 0
    summary = serial.summary()
    assert summary["instances"] == 8 and summary["disagree"] == 0


def test_audit_batch_auto_ids_are_sorted():
    instances = [generators.generate("3sum", 3, "random", i) for i in range(3)]
    report = pipeline.audit_batch(instances, [], workers=1)
    assert [r.instance_id for r in report.records] == ["i000000", "i000001", "i000002"]


def test_oracle_cutoff_skips_large_instances():
    cfg = Config(oracle_cubic_max=2)
    inst = generators.generate("3sum", 6, "random", 11)
    rec = pipeline.run_pipeline(inst, [], config=cfg).records[0]
    assert rec.stages[0].oracle_skipped


# ------------------------------------------------------------------ benchmarks

def test_bench_records_and_csv_round_trip(tmp_path: Path):
    records = benchmarks.bench("solve_3sum", [32, 64], reps=3, seed=1)
    assert [r.n for r in records] == [32, 64]
    assert all(r.median_ns >= r.min_ns > 0 for r in records)
    path = tmp_path / "bench.csv"
    benchmarks.write_csv(records, path)
    assert benchmarks.read_csv(path) == records
    header = path.read_text().splitlines()[0]
    assert header == "solver,n,median_ns,min_ns,reps"


def test_bench_rejects_bad_requests():
    with pytest.raises(PreconditionViolated):
        benchmarks.bench("solve_3sum", [64, 32], reps=3)
    with pytest.raises(PreconditionViolated):
        benchmarks.bench("solve_3sum", [32, 64], reps=2)
    with pytest.raises(PreconditionViolated):
        benchmarks.bench("no_such_solver", [32, 64], reps=3)
    with pytest.raises(DegenerateInput):
        benchmarks.BenchRecord("solve_3sum", 8, 1, 1, reps=2)


def test_doubling_ratios():
    mk = lambda n, med: benchmarks.BenchRecord("solve_3sum", n, med, med, 3)
    ratios = benchmarks.doubling_ratios([mk(100, 1000), mk(200, 4100), mk(400, 16000)])
    assert ratios == [4.1, pytest.approx(16000 / 4100)]


def test_bench_worst_case_instances_are_no():
    import random

    for name, (builder, fn) in benchmarks.SOLVERS.items():
        inst = builder(8, random.Random(1))
        assert fn(inst) is None, name  # solvers must scan the full space


# --------------------------------------------------------------------- figures

def test_render_comb_svg(tmp_path: Path):
    inst = SegContPntInstance((rat(0), rat(2)), IntervalSet([iv(0, 1), iv(2, 3)]))
    out = tmp_path / "comb.svg"
    figures.render_comb(build_comb_pair(inst), out)
    text = out.read_text()
    assert text.count("<path") == 2
    assert 'data-role="outer"' in text and 'data-role="inner"' in text


def test_render_wedges_svg(tmp_path: Path):
    inst = SegContPntInstance((rat("1/2"),), IntervalSet([iv("1/4", "3/4")]))
    wi, wo, _ = wedges_from_instance(inst)
    out = tmp_path / "wedges.svg"
    figures.render_wedges(wi, wo, out)
    assert out.read_text().count("<path") == 2


def test_render_hausdorff_gadget_svg(tmp_path: Path):
    inst = SegContPntInstance((rat(0), rat("1/2")), IntervalSet([iv("1/4", "3/4")]))
    a, b, eps = reduce_to_hausdorff(inst)
    out = tmp_path / "gadget.svg"
    figures.render_hausdorff_gadget(a, b, eps, out)
    text = out.read_text()
    for role in ("l1", "l2", "l3", "l4"):
        assert f'data-role="{role}"' in text
    assert "data-y=" in text


def test_bench_and_audit_plots(tmp_path: Path):
    records = [benchmarks.BenchRecord("solve_3sum", n, 1000 * n, 900 * n, 3) for n in (100, 200)]
    figures.bench_plot(records, tmp_path / "bench.png")
    assert (tmp_path / "bench.png").stat().st_size > 0

    inst = generators.generate("3sum-prime", 3, "planted-yes", 2)
    report = pipeline.run_pipeline(inst, CHAIN)
    figures.audit_plot(report, tmp_path / "audit.png")
    assert (tmp_path / "audit.png").stat().st_size > 0


# ---------------------------------------------------------------------- config

def test_config_defaults_and_file_override(tmp_path: Path):
    assert Config().oracle_quartic_max == 10
    path = tmp_path / "bench.cfg"
    path.write_text("# comment line\noracle_quartic_max = 16\ncell_limit=500\n\n")
    cfg = load_config(path)
    assert cfg.oracle_quartic_max == 16
    assert cfg.cell_limit == 500
    assert cfg.oracle_cubic_max == Config().oracle_cubic_max


def test_config_rejects_unknown_or_malformed_keys(tmp_path: Path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("no_such_key = 3\n")
    with pytest.raises(ValueError):
        load_config(bad)
    bad.write_text("cell_limit = many\n")
    with pytest.raises(ValueError):
        load_config(bad)

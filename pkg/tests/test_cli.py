"""Command line surface: verbs, file outputs, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from gadgetbench import files
from gadgetbench.cli import main
from gadgetbench.geometry import Interval, IntervalSet
from gadgetbench.instances import SegContPntInstance
from gadgetbench.rationals import rat


def run(*argv, capsys) -> tuple[int, str]:
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def seed_instance(tmp_path: Path, name="inst.json", points=("0", "1/2"), ivs=(("0", "1/4"), ("1/2", "3/4"))):
    inst = SegContPntInstance(
        tuple(rat(p) for p in points),
        IntervalSet([Interval(rat(lo), rat(hi)) for lo, hi in ivs]),
    )
    path = tmp_path / name
    files.write_instance(path, inst)
    return path, inst


def test_gen_writes_deterministic_file(tmp_path, capsys):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "--kind", "3sum", "--n", "5", "--mode", "planted-yes", "--seed", "3", "--out", str(out1)]) == 0
    assert main(["gen", "--kind", "3sum", "--n", "5", "--mode", "planted-yes", "--seed", "3", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert files.kind_of(files.read_instance(out1)) == "3sum"


def test_gen_to_stdout(tmp_path, capsys):
    code, out = run("gen", "--kind", "eqdist", "--n", "3", "--seed", "1", capsys=capsys)
    assert code == 0
    assert json.loads(out)["kind"] == "eqdist"


def test_reduce_chain_to_segcontpnt(tmp_path, capsys):
    src = tmp_path / "p.json"
    main(["gen", "--kind", "3sum-prime", "--n", "3", "--mode", "planted-yes", "--seed", "2", "--out", str(src)])
    cur = src
    for step in ("normalize", "prime-to-eqdist", "eqdist-to-segcontpnt"):
        nxt = tmp_path / f"{step}.json"
        assert main(["reduce", str(cur), "--step", step, "--out", str(nxt)]) == 0
        cur = nxt
    assert files.kind_of(files.read_instance(cur)) == "segcontpnt"


def test_reduce_rejects_wrong_source_kind(tmp_path, capsys):
    path, _ = seed_instance(tmp_path)
    assert main(["reduce", str(path), "--step", "normalize"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_solve_plain_and_witness(tmp_path, capsys):
    path, _ = seed_instance(tmp_path)
    code, out = run("solve", path, capsys=capsys)
    assert code == 0
    assert "answer: yes" in out and "witness:" in out


def test_solve_via_each_gadget(tmp_path, capsys):
    path, _ = seed_instance(tmp_path)
    for via, expect in (("polycont", "t=("), ("rotation", "angle="), ("rigid", "angle="), ("hausdorff", "bounds:")):
        code, out = run("solve", path, "--via", via, capsys=capsys)
        assert code == 0, via
        assert "answer: yes" in out, via
        assert expect in out, via


def test_solve_via_gadgets_on_chain_image_falls_back_to_exact(tmp_path, capsys):
    # full-chain images pin the shift exactly: the hausdorff grid blows its
    # cell budget and the wedge arcs collapse; both paths must still answer
    src = tmp_path / "p.json"
    main(["gen", "--kind", "3sum-prime", "--n", "3", "--mode", "planted-yes", "--seed", "5", "--out", str(src)])
    cur = src
    for step in ("normalize", "prime-to-eqdist", "eqdist-to-segcontpnt"):
        nxt = tmp_path / f"{step}.json"
        main(["reduce", str(cur), "--step", step, "--out", str(nxt)])
        cur = nxt
    for via in ("rotation", "rigid", "hausdorff"):
        code, out = run("solve", cur, "--via", via, capsys=capsys)
        assert code == 0, via
        assert "answer: yes" in out, via
        assert "exact shift search" in out, via


def test_solve_via_hausdorff_writes_certificate(tmp_path, capsys):
    path, _ = seed_instance(tmp_path)
    cert = tmp_path / "cert.json"
    code, _ = run("solve", path, "--via", "hausdorff", "--out", cert, capsys=capsys)
    assert code == 0
    report = json.loads(cert.read_text())
    assert report["certified"] is True
    assert set(report) >= {"lower", "upper", "epsilon", "grid_step", "search_box", "truncation"}


def test_solve_via_on_wrong_kind_exits_2(tmp_path, capsys):
    src = tmp_path / "s.json"
    main(["gen", "--kind", "3sum", "--n", "4", "--out", str(src)])
    assert main(["solve", str(src), "--via", "polycont"]) == 2


def test_audit_agreeing_batch_exit_0(tmp_path, capsys):
    srcs = []
    for i, mode in enumerate(("planted-yes", "adversarial-no")):
        p = tmp_path / f"{mode}.json"
        main(["gen", "--kind", "3sum-prime", "--n", "4", "--mode", mode, "--seed", str(i), "--out", str(p)])
        srcs.append(str(p))
    rep = tmp_path / "rep"
    code, out = run("audit", *srcs, "--chain", "normalize,prime-to-eqdist,eqdist-to-segcontpnt", "--out", rep, capsys=capsys)
    assert code == 0
    assert '"disagree": 0' in out
    assert (rep / "report.csv").exists()
    assert (rep / "report.json").exists()
    assert (rep / "report.png").stat().st_size > 0
    header = (rep / "report.csv").read_text().splitlines()[0]
    assert header.startswith("instance_id,stage,kind,answer")


def test_bench_writes_csv_and_png(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, text = run("bench", "--solver", "solve_3sum", "--sizes", "32,64", "--reps", "3", "--out", out, capsys=capsys)
    assert code == 0
    assert "doubling ratio:" in text
    assert out.read_text().startswith("solver,n,median_ns,min_ns,reps")
    assert (tmp_path / "b.png").stat().st_size > 0


def test_render_all_figures(tmp_path, capsys):
    path, _ = seed_instance(tmp_path)
    for what in ("comb", "wedges", "hausdorff"):
        out = tmp_path / f"{what}.svg"
        assert main(["render", str(path), "--what", what, "--out", str(out)]) == 0
        assert out.read_text().startswith("<?xml")


def test_config_file_reaches_pipeline(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("oracle_cubic_max = 1\n")
    src = tmp_path / "s.json"
    main(["gen", "--kind", "3sum-prime", "--n", "4", "--mode", "planted-yes", "--seed", "1", "--out", str(src)])
    code, out = run("audit", src, "--chain", "normalize", "--config", cfg, capsys=capsys)
    assert code == 0
    assert json.loads(out.splitlines()[-1])["oracle_skipped_stages"] > 0


def test_unreadable_input_exits_2(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "missing.json")]) == 2


def test_console_script_entry_point(tmp_path):
    # the installed script must expose the same surface as main()
    proc = subprocess.run(
        [sys.executable, "-m", "gadgetbench.cli", "gen", "--kind", "segcontpnt", "--n", "3", "--seed", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "segcontpnt"

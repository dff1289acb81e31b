"""Runtime knobs for the audit, bench, and certification harnesses.

Config files are plain ``key=value`` lines; ``#`` starts a comment.  All
values are integers.  Unknown keys are rejected so typos surface instead of
silently running with defaults.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Config:
    # brute-oracle size cutoffs by oracle cost class
    oracle_quartic_max: int = 10
    oracle_cubic_max: int = 60
    # translation-grid budget for certified threshold decisions
    cell_limit: int = 2_000_000
    # benchmark repetitions (one extra warm-up run is discarded)
    bench_reps: int = 5
    # audit batch concurrency; 0 picks the interpreter default
    audit_workers: int = 0


def load_config(path: str | Path) -> Config:
    known = {f.name for f in fields(Config)}
    overrides: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            overrides[key] = int(value.strip())
        except ValueError:
            raise ValueError(f"{path}:{lineno}: {key} needs an integer, got {value.strip()!r}") from None
    return replace(Config(), **overrides)

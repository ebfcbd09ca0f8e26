"""Exhaustive verification sweeps over bounded partitions.

Enumerates every partition inside a (k, n) box, or every member of the
n = k+1 Frobenius family up to a bound, runs the selected identity checks on
each, and assembles a deterministic report.  Cases are independent, so the
sweep can fan out over worker processes; the report content never depends on
the worker count, and serialized reports are byte-identical across runs with
the same configuration.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator

from .bijections import theorem_report
from .diagrams import Partition
from .projective import ClassBPartition, StrictPartition, alpha_from_strict, projective_report

__all__ = [
    "SweepConfig",
    "SweepReport",
    "enumerate_partitions",
    "enumerate_class_B",
    "run_sweep",
]

THEOREM_NAMES = ("1", "2", "3", "projective")


def enumerate_partitions(k: int, n: int) -> Iterator[Partition]:
    """All weakly decreasing k-tuples with entries in 0..n, lexicographically."""
    if k < 1 or n < 1:
        raise ValueError(f"need k, n >= 1, got k={k}, n={n}")
    parts = [0] * k
    while True:
        yield Partition(tuple(parts), k, n)
        j = k - 1
        while j >= 0:
            limit = n if j == 0 else parts[j - 1]
            if parts[j] < limit:
                break
            j -= 1
        if j < 0:
            return
        parts[j] += 1
        for t in range(j + 1, k):
            parts[t] = 0


def enumerate_class_B(k: int) -> Iterator[ClassBPartition]:
    """All 2**k members of the Frobenius family with bound k.

    Subsets of {1..k} are taken in binary-mask order, bit b standing for the
    part b+1, each read off in decreasing order.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    for mask in range(1 << k):
        parts = tuple(b + 1 for b in range(k - 1, -1, -1) if mask >> b & 1)
        yield alpha_from_strict(StrictPartition(parts, k))


@dataclass(frozen=True)
class SweepConfig:
    max_k: int
    max_n: int | None
    theorems: tuple[str, ...]
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.max_k < 1:
            raise ValueError(f"max_k must be at least 1, got {self.max_k}")
        if not self.theorems:
            raise ValueError("at least one identity must be selected")
        for t in self.theorems:
            if t not in THEOREM_NAMES:
                raise ValueError(f"unknown identity {t!r}")
        needs_n = any(t != "projective" for t in self.theorems)
        if needs_n and (self.max_n is None or self.max_n < 1):
            raise ValueError("max_n must be at least 1 for box sweeps")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")


def _enumerate_cases(cfg: SweepConfig) -> list[tuple]:
    cases = []
    box = [t for t in cfg.theorems if t != "projective"]
    if box:
        for n in range(1, cfg.max_n + 1):
            for k in range(1, cfg.max_k + 1):
                for p in enumerate_partitions(k, n):
                    for t in box:
                        cases.append(("box", t, p.parts, k, n))
    if "projective" in cfg.theorems:
        for k in range(1, cfg.max_k + 1):
            for b in enumerate_class_B(k):
                cases.append(("projective", b.alpha.parts, b.lam.parts, k))
    return cases


def _case_verdict(case: tuple) -> bool:
    if case[0] == "box":
        _, t, parts, k, n = case
        report = theorem_report(Partition(parts, k, n), int(t))
        return report["verdict"] == "pass"
    _, alpha_parts, lam_parts, k = case
    b = alpha_from_strict(StrictPartition(lam_parts, k))
    assert b.alpha.parts == alpha_parts
    return projective_report(b)["theorem"] == "pass"


def _case_json(case: tuple, ok: bool) -> dict:
    verdict = "pass" if ok else "fail"
    if case[0] == "box":
        _, t, parts, k, n = case
        return {"theorem": t, "alpha": list(parts), "k": k, "n": n,
                "verdict": verdict}
    _, alpha_parts, lam_parts, k = case
    return {"theorem": "projective", "alpha": list(alpha_parts),
            "lambda": list(lam_parts), "k": k, "n": k + 1, "verdict": verdict}


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    cases: tuple[dict, ...]
    counts: dict[str, int]
    first_counterexample: dict | None
    duration: float

    @property
    def verdict(self) -> str:
        return "fail" if self.first_counterexample is not None else "pass"

    def to_json(self) -> dict:
        # duration and worker count are left out: the serialized report must
        # be identical from run to run for a given configuration
        return {
            "config": {
                "maxK": self.config.max_k,
                "maxN": self.config.max_n,
                "theorems": list(self.config.theorems),
            },
            "counts": dict(sorted(self.counts.items())),
            "verdict": self.verdict,
            "firstCounterexample": self.first_counterexample,
            "cases": list(self.cases),
        }

    def write(self, path: str) -> None:
        data = json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(data)


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Run every selected check over the enumerated inputs."""
    started = time.monotonic()
    cases = _enumerate_cases(cfg)
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            verdicts = pool.map(_case_verdict, cases, chunksize=16)
    else:
        verdicts = [_case_verdict(c) for c in cases]

    entries = tuple(_case_json(c, ok) for c, ok in zip(cases, verdicts))
    counts: dict[str, int] = {}
    first = None
    for entry in entries:
        counts[entry["theorem"]] = counts.get(entry["theorem"], 0) + 1
        if first is None and entry["verdict"] == "fail":
            first = entry
    report = SweepReport(
        config=cfg,
        cases=entries,
        counts=counts,
        first_counterexample=first,
        duration=time.monotonic() - started,
    )
    if cfg.out:
        report.write(cfg.out)
    return report

"""
Exhaustive verification sweeps
==============================

The identities are theorems, so sweeping every partition in a box (or every
member of the n = k+1 family up to a bound) should never find a
counterexample.  The sweep runner enumerates all cases, runs the selected
checks, and produces a JSON report that is byte-identical from run to run,
whatever the worker count.  The same sweeps are reachable from the command
line via `hookpair sweep`.
"""

import json
import tempfile
from pathlib import Path

from hookpair import run_sweep, SweepConfig

# Every partition with k <= 3 parts bounded by n <= 3, all three identities.
cfg = SweepConfig(max_k=3, max_n=3, theorems=("1", "2", "3"))
report = run_sweep(cfg)
print(f"box sweep k <= {cfg.max_k}, n <= {cfg.max_n}: "
      f"{sum(report.counts.values())} cases, verdict {report.verdict}")
print(f"  per identity: {report.counts}")
print(f"  wall time: {report.duration:.2f}s")
print()

# The n = k+1 family, every strict seed up to k = 6.
proj = run_sweep(SweepConfig(max_k=6, max_n=None, theorems=("projective",)))
print(f"family sweep k <= 6: {sum(proj.counts.values())} members, "
      f"verdict {proj.verdict}")
print()

# Reports serialize deterministically: two runs, two byte-identical files.
with tempfile.TemporaryDirectory() as tmp:
    first = Path(tmp) / "first.json"
    second = Path(tmp) / "second.json"
    run_sweep(SweepConfig(max_k=2, max_n=2, theorems=("1",), out=str(first)))
    run_sweep(SweepConfig(max_k=2, max_n=2, theorems=("1",), out=str(second),
                          jobs=2))
    same = first.read_bytes() == second.read_bytes()
    print(f"two reports (serial vs 2 workers) byte-identical: {same}")
    data = json.loads(first.read_text())
    print(f"report keys: {sorted(data)}")
    print(f"first case entry: {data['cases'][0]}")

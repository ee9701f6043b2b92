#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-Python fallback.

Runs the same Betti-table workloads in two subprocesses (one per backend)
and prints a timing table. Results must agree exactly.
"""

import json
import os
import subprocess
import sys

WORKLOADS = [
    ("path:12", 3),
    ("cycle:10", 2),
    ("cycle:11", 3),
    ("wcycle:5", 2),
]

WORKER = r"""
import json, sys, time
from matchpower import graphs, ideals, homalg
from matchpower._kernels import backend_name

out = {"backend": backend_name(), "runs": []}
for desc, k in json.loads(sys.argv[1]):
    g = graphs.from_descriptor(desc)
    ideal = ideals.sqf_power(g, k)
    t0 = time.perf_counter()
    table = homalg.betti_hochster(ideal)
    dt = time.perf_counter() - t0
    out["runs"].append({"desc": desc, "k": k, "seconds": dt,
                        "reg": table.max_shift(),
                        "pd": table.max_homological_index()})
print(json.dumps(out))
"""


def run_backend(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["MATCHPOWER_PURE"] = "1"
    else:
        env.pop("MATCHPOWER_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(WORKLOADS)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> int:
    compiled = run_backend(pure=False)
    pure = run_backend(pure=True)
    if compiled["backend"] == pure["backend"]:
        print("note: compiled extension unavailable; comparing pure to itself")
    print(f"{'workload':<16} {'compiled (s)':>12} {'pure (s)':>12} {'speedup':>9}")
    for a, b in zip(compiled["runs"], pure["runs"]):
        assert (a["reg"], a["pd"]) == (b["reg"], b["pd"]), "backend mismatch"
        ratio = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        name = f"{a['desc']} k={a['k']}"
        print(f"{name:<16} {a['seconds']:>12.3f} {b['seconds']:>12.3f} "
              f"{ratio:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Convergence curves as plain two-column data files.

Writes one file per algorithm for TF9 (Rastrigin) and prints a coarse text
rendering of the curves; any plotting tool can read the files directly,
e.g. gnuplot's ``plot 'TF9_LPBSA.dat' with lines``.
"""

import math
import sys
from pathlib import Path

from lpbsa import AlgorithmConfig, get_function, lpb_run, lpbsa_run, make_rng
from lpbsa.harness import emit_convergence

out = Path(sys.argv[1] if len(sys.argv) > 1 else "convergence_demo")
spec = get_function("TF9")
traces = {
    "LPB": lpb_run(spec, AlgorithmConfig.lpb(max_iterations=500), make_rng(1)),
    "LPBSA": lpbsa_run(spec, AlgorithmConfig(max_iterations=500), make_rng(1)),
}
for alg, tr in traces.items():
    path = emit_convergence(tr, out / f"TF9_{alg}.dat")
    print(f"wrote {path} ({tr.best_costs.size} rows, final {tr.best_cost:.4g})")

# log10 best cost every 50 iterations
print("\niter   " + "  ".join(f"{a:>8s}" for a in traces))
for i in range(49, 500, 50):
    row = [f"{math.log10(max(t.best_costs[i], 1e-300)):8.2f}" for t in traces.values()]
    print(f"{i + 1:4d}   " + "  ".join(row))

"""LPB against LPBSA on a handful of classical functions.

Each algorithm gets five paired seeds; final best costs are summarised and
compared with the two-sided rank-sum test.
"""

import numpy as np

from lpbsa import AlgorithmConfig, get_function, run_replicates, summarize, wilcoxon_rank_sum

RUNS = 5
MAX_IT = 300

for fid in ("TF1", "TF9", "TF16", "TF18"):
    spec = get_function(fid)
    finals = {}
    for alg in ("LPB", "LPBSA"):
        cfg = AlgorithmConfig.for_algorithm(alg, max_iterations=MAX_IT)
        finals[alg] = [t.best_cost for t in run_replicates(spec, cfg, alg, RUNS, base_seed=0)]
    lpb, sa = summarize(finals["LPB"]), summarize(finals["LPBSA"])
    p = wilcoxon_rank_sum(finals["LPBSA"], finals["LPB"])
    print(f"{fid:5s} ({spec.description})")
    print(f"      LPB   mean {lpb.mean:.6g}  std {lpb.std:.3g}")
    print(f"      LPBSA mean {sa.mean:.6g}  std {sa.std:.3g}   p = {p:.3g}")
    if spec.known_optimum is not None:
        print(f"      known optimum {spec.known_optimum:.6g}")

# a single run exposes the whole trace
trace = run_replicates(get_function("TF18"), AlgorithmConfig(max_iterations=MAX_IT), "LPBSA", 1, 7)[0]
print("\nTF18 seed 7: best", trace.best_cost, "at", np.round(trace.best_individual.position, 6))
print("evaluations", trace.evaluations, " Metropolis acceptance rate", round(trace.acceptance_rate, 3))

"""Drive the experiment harness from Python instead of the CLI.

Runs the ``plans/smoke.ini`` plan (a shortened Table-2 shape), then reads
back the summary CSV it wrote.
"""

import csv
import sys
from pathlib import Path

from lpbsa.harness import execute, parse_plan

here = Path(__file__).parent
plan = parse_plan(here / "plans" / "smoke.ini")
if len(sys.argv) > 1:
    plan.output_dir = sys.argv[1]
report = execute(plan)

print(f"baseline: {report.baseline}")
for fn, row in report.p_values.items():
    cells = "  ".join(f"{alg}={'-' if p is None else f'{p:.3g}'}" for alg, p in row.items())
    print(f"{fn:5s} p-values {cells}")

with open(Path(plan.output_dir) / "summary.csv") as fh:
    rows = list(csv.DictReader(fh))
print(f"\n{len(rows)} summary rows, e.g.", rows[0])

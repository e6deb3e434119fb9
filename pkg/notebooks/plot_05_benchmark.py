"""
Comparing insertion algorithms
===============================

Remove 10% of the edges of a random strongly connected graph and time how
fast each variant puts them back. Only the ranking is meaningful here.
"""

import random

from lowhigh import FlowGraph
from lowhigh.bench import WorkloadSpec, run_experiment

rnd = random.Random(2)
n, m = 400, 2000
perm = list(range(1, n + 1))
rnd.shuffle(perm)
edges = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
while len(edges) < m:
    u, v = rnd.randint(1, n), rnd.randint(1, n)
    if u != v:
        edges.add((u, v))
G = FlowGraph(n, 1, sorted(edges))

for algo in ("efficient", "simple", "slt", "slt-nca"):
    row = run_experiment(WorkloadSpec("sc400", mode="dynamize", percent=0.1, seed=2, algo=algo), G).rows[0]
    print(f"{algo:10s} {row['seconds']}s  nu={row['nu_total']} mu={row['mu_total']}")

###############################################################################
# The same rows are what ``lowhigh bench`` writes as CSV.

print(run_experiment(WorkloadSpec("sc400", mode="dynamize", percent=0.1, seed=2, verify=True), G).to_csv())

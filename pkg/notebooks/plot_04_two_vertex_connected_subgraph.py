"""
Sparse 2-vertex-connected spanning subgraphs
=============================================

Grow a random digraph until it is 2-vertex-connected, then keep at most
4(n-1) of its edges with the low-high based construction.
"""

import random

from lowhigh import FlowGraph, is_2vc, lh_z

rnd = random.Random(5)
n = 25
edges = set()
while True:
    u, v = rnd.randint(1, n), rnd.randint(1, n)
    if u != v:
        edges.add((u, v))
    if len(edges) >= n and is_2vc(FlowGraph(n, 1, sorted(edges))):
        break
G = FlowGraph(n, 1, sorted(edges))

res = lh_z(G)
print(f"input edges {G.m}, kept {len(res)}, bound {4 * (n - 1)}")
print("still 2VC:", is_2vc(res.as_graph(n)))
print(res.stats)

"""
Maintaining a low-high order under edge insertions
===================================================

Insert random edges one at a time and watch the affected sets, the work
counters and the oracle agreement.
"""

import random

from lowhigh import LowHighState, brute_force_dominators, insert_edge, verify_low_high

rnd = random.Random(3)
n = 12
state = LowHighState(n, 1)
# start from a path so every vertex is reachable and dominated by its predecessor
for v in range(2, n + 1):
    insert_edge(state, v - 1, v)
print("chain idom:", state.dom.parent_map())

for step in range(30):
    u, v = rnd.randint(1, n), rnd.randint(1, n)
    rep = insert_edge(state, u, v)
    affected = rep.A if rep is not None else []
    ok = state.dom.parent_map() == brute_force_dominators(state.graph).parent_map()
    if affected:
        print(f"{step:2d} ({u},{v}) affected={sorted(affected)} oracle ok={ok}")

###############################################################################
# The final order still certifies the tree.

print("order:", state.order())
print("valid:", verify_low_high(state.graph, state.dom, state.order()))
print(state.stats)

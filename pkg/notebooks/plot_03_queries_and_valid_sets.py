"""
Disjoint paths, avoiding paths and valid sets
==============================================

The low-high state carries two strongly divergent spanning trees B and R.
They answer path queries by simple tree walks.
"""

from lowhigh import FlowGraph, initialize, query_avoiding_path, query_two_disjoint_paths, valid_set

G = FlowGraph(5, 1, [(1, 2), (2, 3), (3, 4), (1, 5), (5, 4)])
state = initialize(G)

pair = query_two_disjoint_paths(state, 3, 5)
print("to 3:", pair.p1, " to 5:", pair.p2)

# 2 does not dominate 4, so a detour exists
print("1 -> 4 avoiding 2:", query_avoiding_path(state, 4, 2))
print("1 -> 3 avoiding 2:", query_avoiding_path(state, 3, 2))

###############################################################################
# A spanning tree loses the second route into 4; the valid set puts it back.

T = {2: 1, 3: 2, 4: 3, 5: 1}
print("extra edges:", sorted(valid_set(state, T).edges))
print("from an empty forest:", sorted(valid_set(state, {}).edges))

"""
Dominator trees and low-high certificates
==========================================

Build a small flow graph, compute its dominator tree with Lengauer-Tarjan,
compare against the brute-force oracle and check a low-high order.
"""

from lowhigh import FlowGraph, brute_force_dominators, certify_dominator_tree, compute_dominators
from lowhigh import initialize, verify_low_high

# two routes into vertex 4: 1->2->3->4 and 1->5->4
G = FlowGraph(5, 1, [(1, 2), (2, 3), (3, 4), (1, 5), (5, 4)])
D = compute_dominators(G)
print("idom:", D.parent_map())
print("oracle agrees:", D.parent_map() == brute_force_dominators(G).parent_map())

###############################################################################
# A low-high order is a preorder of the dominator tree in which every vertex
# has in-neighbours on both sides (or an edge from its idom).

state = initialize(G)
order = state.order()
print("order:", order)
print("low/high of 4:", state.low[4], state.high[4])
print("valid low-high order:", verify_low_high(G, D, order))
print("certificate accepted:", certify_dominator_tree(G, D, order))

###############################################################################
# Swapping 4 and 5 breaks the order: 4 loses its high witness.

print("swapped order valid:", verify_low_high(G, D, [1, 2, 3, 5, 4]))

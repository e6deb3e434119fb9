"""Per-insertion assertions used by verify mode and the acceptance suite.

Each check compares the state before and after one insertion with a
brute-force oracle and with the structural facts the update relies on:
the affected set is exactly the set of vertices whose parent changes, the
search never leaves the subtrees of affected vertices, all affected
vertices hang below one child ``c`` of ``z``, the derived affected graph is
flat and small, and every scanned vertex moves up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .applications import verify_strongly_divergent
from .dominators import DomTree, brute_force_dominators, certify_dominator_tree
from .lowhigh import verify_low_high


class VerificationFailure(AssertionError):
    def __init__(self, check: str, index: int = -1, detail: str = ""):
        msg = f"{check} failed" + (f" at insertion {index}" if index >= 0 else "")
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.check = check
        self.index = index


@dataclass
class Snapshot:
    dom: DomTree


def snapshot(state) -> Snapshot:
    return Snapshot(state.dom.copy())


def _flat_by_oracle(GA) -> bool:
    H, label = GA.to_flow_graph()
    D = brute_force_dominators(H)
    return all(D.reachable[v] and (v == 1 or D.parent[v] == 1) for v in H.vertices())


def check_insertion(before: Snapshot, state, index: int = -1, divergent_limit: int = 25) -> None:
    """Raise :class:`VerificationFailure` on the first violated property."""
    G = state.graph
    D = state.dom
    oracle = brute_force_dominators(G)
    if oracle.parent_map() != D.parent_map():
        raise VerificationFailure("oracle-dominators", index)
    order = state.order()
    if not verify_low_high(G, D, order):
        raise VerificationFailure("low-high", index)
    if not certify_dominator_tree(G, D, order):
        raise VerificationFailure("certify", index)
    if G.n <= divergent_limit and not verify_strongly_divergent(G, D, state.trees()):
        raise VerificationFailure("strongly-divergent", index)

    rep = state.last_report
    if rep is None:
        return
    old = before.dom
    changed = {v for v in G.vertices() if old.reachable[v] and v != old.root and old.parent[v] != D.parent[v]}
    if set(rep.A) != changed:
        raise VerificationFailure("affected-set", index, f"search {sorted(rep.A)} vs oracle {sorted(changed)}")
    if not rep.A:
        return
    for v in rep.scanned:
        if not any(old.is_ancestor(a, v) for a in rep.A):
            raise VerificationFailure("scanned-in-affected-subtrees", index, f"vertex {v}")
        if not D.depth[v] < old.depth[v]:
            raise VerificationFailure("depth-decrease", index, f"vertex {v}")
    if old.parent[rep.c] != rep.z:
        raise VerificationFailure("single-child", index, f"c={rep.c} is not a child of z={rep.z}")
    for v in rep.A:
        if not old.is_ancestor(rep.c, v) or v == rep.c:
            raise VerificationFailure("single-child", index, f"affected {v} outside D(c)")
    GA = state.last_derived
    if GA is not None:
        if not _flat_by_oracle(GA):
            raise VerificationFailure("derived-graph-flat", index)
        if len(GA.vertices()) > rep.nu + 4:
            raise VerificationFailure("derived-graph-size", index, "too many vertices")
        if GA.raw_edge_count > rep.mu + 5:
            raise VerificationFailure("derived-graph-size", index, "too many edges")

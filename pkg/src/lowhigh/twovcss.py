"""Sparse 2-vertex-connected spanning subgraphs from low-high orders.

``lh_z`` keeps a strongly connected spanning subgraph of ``G - s`` and then
adds, for every vertex, whatever low or high witness is still missing with
respect to low-high orders of ``G`` and of its reverse. The result has at
most ``4(n - 1)`` edges, at most twice the optimum.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .dominators import compute_dominators
from .graph import FlowGraph, reverse
from .incremental import initialize

__all__ = ["NotStronglyConnected", "Not2VC", "SubgraphResult", "is_2vc", "lh_z", "scss_2approx"]


class NotStronglyConnected(ValueError):
    pass


class Not2VC(ValueError):
    pass


@dataclass
class SubgraphResult:
    edges: set = field(default_factory=set)
    stats: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.edges)

    def as_graph(self, n: int, start: int = 1) -> FlowGraph:
        return FlowGraph(n, start, sorted(self.edges))


def _flat(G: FlowGraph) -> bool:
    D = compute_dominators(G)
    s = G.start
    return all(D.reachable[v] and (v == s or D.parent[v] == s) for v in G.vertices())


def _bfs_tree(adj, root: int, allowed: set) -> dict[int, int]:
    parent = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(set(adj[u])):
            if w in allowed and w not in parent:
                parent[w] = u
                queue.append(w)
    return parent


def _strongly_connected(G: FlowGraph, verts: set) -> bool:
    if not verts:
        return True
    root = min(verts)
    return (len(_bfs_tree(G.out_adj, root, verts)) == len(verts)
            and len(_bfs_tree(G.in_adj, root, verts)) == len(verts))


def is_2vc(G: FlowGraph) -> bool:
    """True iff ``G`` has at least 3 vertices and stays strongly connected after any vertex deletion."""
    if G.n < 3:
        return False
    s = G.start
    if not (_flat(G) and _flat(reverse(G))):
        return False
    return _strongly_connected(G, set(G.vertices()) - {s})


def scss_2approx(G: FlowGraph, vertices: Iterable[int] | None = None) -> set:
    """Out-tree plus in-tree from the lowest id: a strongly connected spanning subgraph.

    ``vertices`` restricts the graph to an induced subgraph (default: all).
    At most ``2(k - 1)`` edges for ``k`` vertices.
    """
    verts = set(G.vertices() if vertices is None else vertices)
    if not verts:
        return set()
    root = min(verts)
    out_tree = _bfs_tree(G.out_adj, root, verts)
    in_tree = _bfs_tree(G.in_adj, root, verts)
    if len(out_tree) != len(verts) or len(in_tree) != len(verts):
        raise NotStronglyConnected("graph is not strongly connected")
    edges = {(p, v) for v, p in out_tree.items() if p}
    edges |= {(v, p) for v, p in in_tree.items() if p}
    return edges


def _witness_pass(G: FlowGraph, H_in: dict, pre: list[int], s: int, add) -> tuple[int, int]:
    """Add a missing low or high witness for every vertex; returns (low_added, high_added).

    ``H_in[v]`` holds the current in-neighbours of ``v`` in the subgraph, in
    the orientation of ``G``. A high witness may also be ``s`` itself.
    """
    low_added = high_added = 0
    for v in G.vertices():
        if v == s:
            continue
        pv = pre[v]
        have = H_in[v]
        if not any(pre[u] < pv for u in have):
            u = min(u for u in set(G.in_adj[v]) if pre[u] < pv)
            add(u, v)
            low_added += 1
        if not any(pre[w] > pv or w == s for w in have):
            w = min(w for w in set(G.in_adj[v]) if pre[w] > pv or w == s)
            add(w, v)
            high_added += 1
    return low_added, high_added


def lh_z(G: FlowGraph) -> SubgraphResult:
    """2-approximate smallest 2-vertex-connected spanning subgraph of ``G``."""
    if not is_2vc(G):
        raise Not2VC("input graph is not 2-vertex-connected")
    s = min(G.vertices())
    if s != G.start:
        G = FlowGraph(G.n, s, G.edges())
    res = SubgraphResult()
    res.edges = scss_2approx(G, set(G.vertices()) - {s})
    res.stats["scss"] = len(res.edges)

    GR = reverse(G)
    for name, graph, flip in (("forward", G, False), ("reverse", GR, True)):
        pre = initialize(graph).dom.pre
        H_in: dict[int, set] = {v: set() for v in graph.vertices()}
        for u, v in res.edges:
            if flip:
                u, v = v, u
            H_in[v].add(u)

        def add(u: int, v: int, _flip=flip, _H_in=H_in) -> None:
            _H_in[v].add(u)
            res.edges.add((v, u) if _flip else (u, v))

        lo, hi = _witness_pass(graph, H_in, pre, s, add)
        res.stats[f"{name}_low"] = lo
        res.stats[f"{name}_high"] = hi
    res.stats["edges"] = len(res.edges)
    return res

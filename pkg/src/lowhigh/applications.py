"""Queries answered from a maintained low-high state.

Two strongly divergent spanning trees ``B`` and ``R`` come straight from the
witness arrays: ``b(v)`` is the low witness (or ``d(v)``), ``r(v)`` the high
witness (or ``d(v)``). From them we get pairs of maximally disjoint paths,
paths avoiding a given vertex, and small edge sets that preserve dominators
when added to a spanning forest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .dominators import DomTree, Unreachable
from .graph import FlowGraph
from .incremental import LowHighState, refresh_divergent
from .lowhigh import SpanningTreePair

__all__ = [
    "InvalidForest",
    "PathPair",
    "ValidSet",
    "query_avoiding_path",
    "query_two_disjoint_paths",
    "refresh_divergent",
    "tree_path",
    "valid_set",
    "verify_strongly_divergent",
]


class InvalidForest(ValueError):
    pass


@dataclass
class PathPair:
    p1: list[int]
    p2: list[int]


@dataclass
class ValidSet:
    edges: set = field(default_factory=set)

    def __len__(self) -> int:
        return len(self.edges)


def iter_tree_path(parent: Mapping[int, int] | list, root: int, v: int) -> Iterator[int]:
    """Vertices from ``v`` up to ``root`` along parent links (reverse order)."""
    while v != root:
        yield v
        v = parent[v]
    yield root


def tree_path(parent, root: int, v: int) -> list[int]:
    path = list(iter_tree_path(parent, root, v))
    path.reverse()
    return path


def _need_reachable(state: LowHighState, *vs: int) -> None:
    for v in vs:
        if not (1 <= v <= state.n) or not state.dom.reachable[v]:
            raise Unreachable(f"vertex {v} is not reachable from the start vertex")


def query_two_disjoint_paths(state: LowHighState, v: int, w: int) -> PathPair:
    """Paths ``s -> v`` and ``s -> w`` meeting only in common dominators.

    The δ-smaller endpoint takes its B path and the other its R path; for
    ``v == w`` this gives ``B[s,v]`` and ``R[s,v]``.
    """
    _need_reachable(state, v, w)
    s = state.start
    pre = state.dom.pre
    if pre[v] < pre[w]:
        return PathPair(tree_path(state.b, s, v), tree_path(state.r, s, w))
    return PathPair(tree_path(state.r, s, v), tree_path(state.b, s, w))


def query_avoiding_path(state: LowHighState, v: int, w: int) -> list[int] | None:
    """A path from ``s`` to ``v`` that avoids ``w``, or None when ``w`` dominates ``v``."""
    _need_reachable(state, v)
    D = state.dom
    s = state.start
    if not (1 <= w <= state.n) or not D.reachable[w]:
        return tree_path(state.b, s, v)
    if D.is_ancestor(w, v):
        return None
    if D.pre[v] < D.pre[w]:
        return tree_path(state.b, s, v)
    return tree_path(state.r, s, v)


def _check_forest(state: LowHighState, t: Mapping[int, int]) -> None:
    G, D, s = state.graph, state.dom, state.start
    for v, p in t.items():
        if not p:
            continue
        if not (1 <= v <= G.n and 1 <= p <= G.n):
            raise InvalidForest(f"forest edge ({p},{v}) outside [1, {G.n}]")
        if v == s:
            raise InvalidForest("the start vertex cannot have a forest parent")
        if not G.has_edge(p, v):
            raise InvalidForest(f"forest edge ({p},{v}) is not in the graph")
        if not (D.reachable[v] and D.reachable[p]):
            raise InvalidForest(f"forest edge ({p},{v}) touches an unreachable vertex")
        if D.is_ancestor(v, p):
            raise InvalidForest(f"forest edge ({p},{v}) leaves a descendant of {v} in the dominator tree")
    # a parent map can still close a cycle among unrelated vertices
    state_of: dict[int, int] = {}
    for v in t:
        path = []
        u = v
        while u and t.get(u) and state_of.get(u, 0) == 0:
            state_of[u] = 1
            path.append(u)
            u = t[u]
        if u and state_of.get(u) == 1:
            raise InvalidForest(f"forest parent map has a cycle through {u}")
        for u in path:
            state_of[u] = 2


def valid_set(state: LowHighState, t: Mapping[int, int]) -> ValidSet:
    """Edges ``E'`` such that the forest ``t`` plus ``E'`` keeps the dominator tree.

    ``t`` maps a vertex to its forest parent; missing or 0 means no parent.
    """
    _check_forest(state, t)
    D, s = state.dom, state.start
    pre = D.pre
    out = ValidSet()
    for v in state.graph.vertices():
        if v == s or not D.reachable[v]:
            continue
        d = D.parent[v]
        tv = t.get(v) or 0
        if tv == d:
            continue
        if state.mark[v]:
            out.edges.add((d, v))
        elif tv:
            if pre[tv] > pre[v]:
                out.edges.add((state.low[v], v))
            else:
                out.edges.add((state.high[v], v))
        else:
            out.edges.add((state.low[v], v))
            out.edges.add((state.high[v], v))
    return out


def verify_strongly_divergent(G: FlowGraph, D: DomTree, trees: SpanningTreePair) -> bool:
    """Check by enumeration that ``trees`` are strongly divergent spanning trees.

    Every parent link must be a graph edge, both maps must reach the root
    from every reachable vertex, and for each pair ``v, w`` one of
    ``B[s,v] ∩ R[s,w]`` and ``R[s,v] ∩ B[s,w]`` must equal the common
    dominators of ``v`` and ``w``.
    """
    s = G.start
    verts = [v for v in G.vertices() if D.reachable[v]]
    b, r = dict(trees.b_parent), dict(trees.r_parent)
    paths_b: dict[int, frozenset] = {s: frozenset((s,))}
    paths_r: dict[int, frozenset] = {s: frozenset((s,))}
    doms: dict[int, frozenset] = {}
    for v in verts:
        doms[v] = frozenset(D.path_from_root(v))
        if v == s:
            continue
        for par, paths in ((b, paths_b), (r, paths_r)):
            p = par.get(v)
            if p is None or not D.reachable[p] or not G.has_edge(p, v):
                return False
            seen = [v]
            u = p
            while u != s:
                if u in seen or len(seen) > len(verts):
                    return False
                seen.append(u)
                u = par.get(u)
                if u is None:
                    return False
            seen.append(s)
            paths[v] = frozenset(seen)
    for v in verts:
        for w in verts:
            common = doms[v] & doms[w]
            if paths_b[v] & paths_r[w] != common and paths_r[v] & paths_b[w] != common:
                return False
    return True

"""Low-high orders: verification and the local reordering step used after an insertion.

After an insertion that moves the affected set ``A`` under ``z``, the new
order of ``z``'s children is computed on a small flat flow graph over
``{z, c, ALPHA, BETA} ∪ A``, where ``c`` is the old child of ``z`` above all
of ``A`` and the two sentinels stand for the siblings of ``c`` before and
after it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .dominators import DomTree, compute_dominators, low_high_violations, preorder_violation
from .graph import FlowGraph

ALPHA = -1
BETA = -2


class StuckPeel(RuntimeError):
    """No vertex can be peeled: the input violates the peeling preconditions."""


class InvariantViolation(RuntimeError):
    pass


def verify_low_high(G: FlowGraph, D: DomTree, order: Sequence[int]) -> bool:
    """True iff ``order`` is a preorder of ``D`` that is low-high for every vertex."""
    if preorder_violation(D, order) is not None:
        return False
    return not low_high_violations(G, D, order)


@dataclass
class DerivedAffectedGraph:
    z: int
    c: int
    affected: list[int]
    edges: set = field(default_factory=set)
    raw_edge_count: int = 0
    side_of_new_edge: str = "z"
    owner: dict = field(default_factory=dict)  # scanned vertex -> nearest affected ancestor

    @property
    def alpha_star(self) -> int:
        return ALPHA

    @property
    def beta_star(self) -> int:
        return BETA

    def vertices(self) -> list[int]:
        return [self.z, ALPHA, BETA, self.c] + list(self.affected)

    def add(self, u: int, v: int) -> None:
        self.raw_edge_count += 1
        self.edges.add((u, v))

    def in_neighbors(self) -> dict[int, list[int]]:
        ins: dict[int, list[int]] = {v: [] for v in self.vertices()}
        for u, v in sorted(self.edges):
            ins[v].append(u)
        return ins

    def to_flow_graph(self) -> tuple[FlowGraph, dict[int, int]]:
        """Relabel to a dense FlowGraph rooted at 1; returns it with the label map."""
        label = {v: i for i, v in enumerate(self.vertices(), start=1)}
        G = FlowGraph(len(label), 1, ((label[u], label[v]) for u, v in sorted(self.edges)))
        return G, label


@dataclass
class SpanningTreePair:
    b_parent: dict
    r_parent: dict


def build_derived_affected(state, z, c, A, scanned, last, new_edge) -> DerivedAffectedGraph:
    """Contract the post-insertion derived graph of ``z`` around the affected set.

    ``state`` still holds the pre-insertion tree and order.
    """
    D: DomTree = state.dom
    G: FlowGraph = state.graph
    aset = set(A)
    if c in aset:
        raise InvariantViolation("c must not be affected")
    for q in A:
        if not D.is_ancestor(c, q) or q == c:
            raise InvariantViolation(f"affected vertex {q} lies outside D(c)")
    GA = DerivedAffectedGraph(z=z, c=c, affected=list(A))
    GA.add(z, ALPHA)
    GA.add(z, BETA)
    if G.has_edge(z, c):
        GA.add(z, c)
    else:
        GA.add(ALPHA, c)
        GA.add(BETA, c)

    # phase 1: walk each affected subtree, stopping at nested affected vertices
    owner = GA.owner
    children, out_adj = D.children, G.out_adj
    for q in A:
        stack = [q]
        while stack:
            u = stack.pop()
            owner[u] = q
            for w in out_adj[u]:
                if w == c or (w in aset and w != q):
                    GA.add(q, w)
            for ch in children[u]:
                if ch not in aset:
                    stack.append(ch)

    # phase 2: edges entering affected vertices from outside the scanned region
    x, y = new_edge
    pre, reach = D.pre, D.reachable
    child_depth = D.depth[z] + 1
    for w in A:
        for u in G.in_adj[w]:
            if u in owner or not reach[u]:
                continue
            if u == z:
                GA.add(z, w)
                if (u, w) == (x, y):
                    GA.side_of_new_edge = "z"
            elif not D.is_ancestor(c, u):
                f = D.ancestor_at_depth(u, child_depth)
                side = ALPHA if pre[f] < pre[c] else BETA
                GA.add(side, w)
                if (u, w) == (x, y):
                    GA.side_of_new_edge = "alpha" if side == ALPHA else "beta"
            else:
                GA.add(c, w)
    return GA


def candidate_trees(GA: DerivedAffectedGraph, last: dict, state, use: str = "b") -> SpanningTreePair:
    """Cheap guess at two divergent spanning trees of ``GA``; callers must verify.

    One tree follows the affected search (the new edge, then ``last``
    edges); the other follows the pre-insertion ``b`` (or ``r``) parents,
    which lead back to ``c``. The search tree takes the side of ``c`` that the
    new edge does not enter from.
    """
    z, c = GA.z, GA.c
    D: DomTree = state.dom
    search: dict = {}
    old: dict = {}
    if (z, c) in GA.edges:
        search[c] = old[c] = z
    elif GA.side_of_new_edge == "beta":
        search[c], old[c] = BETA, ALPHA
    else:
        search[c], old[c] = ALPHA, BETA
    owner = GA.owner
    side = {"z": z, "alpha": ALPHA, "beta": BETA}[GA.side_of_new_edge]
    prev, alt = (state.b, state.r) if use == "b" else (state.r, state.b)

    def phi(u: int) -> int:
        if u in owner:
            return owner[u]
        if u and D.reachable[u] and D.is_ancestor(c, u):
            return c
        return z

    for v in GA.affected:
        search[v] = owner.get(last[v][0], side)
        old[v] = phi(prev[v])
        if old[v] == search[v]:
            old[v] = phi(alt[v])
    if GA.side_of_new_edge == "beta":
        b, r = old, search
    else:
        b, r = search, old
    b[ALPHA] = b[BETA] = r[ALPHA] = r[BETA] = z
    for v in GA.vertices()[1:]:
        if (z, v) in GA.edges:
            b[v] = r[v] = z
    return SpanningTreePair(b, r)


def _tree_path(parent: dict, root: int, v: int, limit: int):
    path = [v]
    while v != root:
        v = parent.get(v)
        if v is None or len(path) > limit:
            return None
        path.append(v)
    return path


def verify_flat_divergent(GA: DerivedAffectedGraph, trees: SpanningTreePair) -> bool:
    z = GA.z
    verts = GA.vertices()
    k = len(verts)
    b, r = trees.b_parent, trees.r_parent
    for v in verts[1:]:
        bv, rv = b.get(v), r.get(v)
        if bv is None or rv is None:
            return False
        if (bv, v) not in GA.edges or (rv, v) not in GA.edges:
            return False
        if not ((bv == z and rv == z) or (bv != rv and bv != z and rv != z)):
            return False
        pb = _tree_path(b, z, v, k)
        pr = _tree_path(r, z, v, k)
        if pb is None or pr is None:
            return False
        if set(pb) & set(pr) != {z, v}:
            return False
    return True


def auxiliary_low_high(GA: DerivedAffectedGraph, trees: SpanningTreePair) -> list[int]:
    """Peel vertices of ``B_A ∪ R_A`` and re-insert them next to their B-parent.

    Returns an order of ``V_A - z`` starting with ALPHA and ending with BETA.
    """
    z = GA.z
    b = dict(trees.b_parent)
    r = dict(trees.r_parent)
    verts = GA.vertices()[1:]
    bkids: dict[int, set] = {v: set() for v in GA.vertices()}
    rkids: dict[int, set] = {v: set() for v in GA.vertices()}
    for v in verts:
        bkids[b[v]].add(v)
        rkids[r[v]].add(v)

    def eligible(v: int) -> bool:
        indeg = 1 if b[v] == r[v] else 2
        return indeg > len(bkids[v]) + len(rkids[v])

    alive = set(verts)
    heap = [v for v in verts if v not in (ALPHA, BETA) and eligible(v)]
    heapq.heapify(heap)
    peeled = []
    while len(alive) > 2:
        v = None
        while heap:
            cand = heapq.heappop(heap)
            if cand in alive and eligible(cand):
                v = cand
                break
        if v is None:
            raise StuckPeel("no peelable vertex in the derived affected graph")
        alive.discard(v)
        bv, rv = b[v], r[v]
        bkids[bv].discard(v)
        rkids[rv].discard(v)
        touched = [bv, rv]
        via_r = False
        if bkids[v]:
            if rkids[v] or len(bkids[v]) != 1:
                raise StuckPeel(f"vertex {v} has more than one outgoing tree edge")
            w = bkids[v].pop()
            b[w] = bv
            bkids[bv].add(w)
        elif rkids[v]:
            if len(rkids[v]) != 1:
                raise StuckPeel(f"vertex {v} has more than one outgoing tree edge")
            w = rkids[v].pop()
            r[w] = rv
            rkids[rv].add(w)
            via_r = True
        peeled.append((v, bv, rv, via_r))
        for t in touched:
            if t in alive and t not in (ALPHA, BETA) and eligible(t):
                heapq.heappush(heap, t)

    order = [ALPHA, BETA]
    for v, bv, rv, via_r in reversed(peeled):
        if bv == z:
            order.insert(1, v)
            continue
        # v goes next to the parent whose child was spliced, facing the other parent
        anchor, other = (rv, bv) if via_r else (bv, rv)
        ia = order.index(anchor)
        io = order.index(other)
        order.insert(ia if io < ia else ia + 1, v)
    return order


def _is_flat(verts: list[int], out: dict, root: int) -> bool:
    """Whether every vertex of ``verts`` is reachable from ``root`` with idom ``root``."""
    label = {v: i for i, v in enumerate(verts, start=1)}
    H = FlowGraph(len(verts), label[root])
    for u in verts:
        for w in out.get(u, ()):
            if w in label and w != u:
                H.add_edge(label[u], label[w])
    D = compute_dominators(H)
    if not all(D.reachable[1:]):
        return False
    r = label[root]
    return all(D.parent[i] == r for i in range(1, len(verts) + 1) if i != r)


def greedy_peel_steps(GA: DerivedAffectedGraph) -> list[tuple[int, int, int | None]]:
    """Peel sequence ``(v, anchor, other)`` used by :func:`greedy_peel_low_high`.

    ``anchor == z`` means ``v`` was deleted outright (it has an edge from
    ``z``); otherwise ``v`` was spliced into ``anchor`` and ``other`` is a
    second in-neighbour (``z`` when ``v`` also has an edge from ``z``).
    """
    z = GA.z
    out: dict[int, set] = {v: set() for v in GA.vertices()}
    for u, v in GA.edges:
        if u != v:
            out[u].add(v)
    alive = GA.vertices()
    peeled = []
    while len(alive) > 3:
        ins: dict[int, set] = {v: set() for v in alive}
        for u in alive:
            for w in out[u]:
                ins[w].add(u)
        step = None
        for v in sorted(x for x in alive if x > 0 and x != z):
            rest = [x for x in alive if x != v]
            if z in ins[v]:
                trial = {u: out[u] - {v} for u in rest}
                if _is_flat(rest, trial, z):
                    step = (v, z, None, trial)
                    break
            for p in sorted(ins[v] - {z, v}):
                others = ins[v] - {p, v}
                if not others:
                    continue
                trial = {u: out[u] - {v} for u in rest}
                trial[p] = trial[p] | (out[v] - {v, p})
                if _is_flat(rest, trial, z):
                    step = (v, p, z if z in others else min(others), trial)
                    break
            if step:
                break
        if step is None:
            raise StuckPeel("greedy peel found no removable vertex; input is not flat")
        v, p, q, trial = step
        peeled.append((v, p, q))
        out = dict(trial)
        out[v] = set()
        alive = [x for x in alive if x != v]
    return peeled


def greedy_peel_low_high(GA: DerivedAffectedGraph) -> list[int]:
    """Fallback ordering for a flat ``GA`` when no verified tree pair is at hand.

    Repeatedly peels the lowest-id vertex ``v`` (never a sentinel) that either
    has an edge from ``z`` and can be deleted, or can be spliced into one of
    its in-neighbours ``p``: ``v`` is removed and each edge ``(v, w)`` becomes
    ``(p, w)``. A peel is accepted only if what remains is still flat. On the
    way back ``v`` is placed right next to ``p``, on the side of another
    in-neighbour ``q``; every other vertex then sees ``v`` exactly where it
    saw ``p``, so witnesses borrowed through the splice stay valid.
    """
    z = GA.z
    order = [ALPHA, BETA]
    for v, p, q in reversed(greedy_peel_steps(GA)):
        if p == z:
            order.insert(1, v)
        elif q == z:
            # either side works; stay inside the sentinels
            ip = order.index(p)
            order.insert(ip if p == BETA else ip + 1, v)
        else:
            ip, iq = order.index(p), order.index(q)
            order.insert(ip if iq < ip else ip + 1, v)
    return order


def derived_low_high(state, report) -> tuple[list[int], bool, DerivedAffectedGraph]:
    """New children order of ``z`` after the insertion described by ``report``.

    Returns ``(children, used_fallback, GA)``.
    """
    z, c = report.z, report.c
    GA = build_derived_affected(state, z, c, report.A, report.scanned, report.last, (report.x, report.y))
    order = None
    for use in ("b", "r"):
        trees = candidate_trees(GA, report.last, state, use)
        if verify_flat_divergent(GA, trees):
            order = auxiliary_low_high(GA, trees)
            break
    fallback = order is None
    if fallback:
        order = greedy_peel_low_high(GA)
    old = state.dom.children[z]
    i = old.index(c)
    middle = order[1:-1]
    return old[:i] + middle + old[i + 1:], fallback, GA

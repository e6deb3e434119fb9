"""Incremental maintenance of the dominator tree and a low-high order.

``insert_edge`` is the efficient update (affected search, local reordering of
the new parent's children); ``insert_edge_simple`` recomputes on the sparse
subgraph ``B ∪ R ∪ Last(A)``; ``baseline_slt`` and ``baseline_slt_nca`` are
the recompute-from-scratch baselines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dominators import DomTree, nca
from .graph import FlowGraph, IdOutOfRange
from .lowhigh import SpanningTreePair, derived_low_high


@dataclass
class Stats:
    nu_total: int = 0
    mu_total: int = 0
    restarts: int = 0
    fallbacks: int = 0
    derived_calls: int = 0
    recomputes: int = 0
    replay_edges: int = 0


@dataclass
class AffectedReport:
    x: int
    y: int
    z: int
    c: int = 0
    A: list = field(default_factory=list)
    last: dict = field(default_factory=dict)
    scanned: list = field(default_factory=list)
    nu: int = 0
    mu: int = 0


class LowHighState:
    """Graph plus dominator tree, low-high order and witness arrays.

    The order δ is the preorder of ``dom`` (``dom.pre``). ``low[v]`` and
    ``high[v]`` hold the source of the witness edge entering ``v`` (0 for
    null); ``b`` and ``r`` are the parents of ``v`` in two strongly
    divergent spanning trees.
    """

    def __init__(self, n: int, start: int):
        self.graph = FlowGraph(n, start)
        self.dom = DomTree(n, start)
        self.dom.parent[start] = 0
        self.dom.children = [[] for _ in range(n + 1)]
        self.dom.renumber()
        self.mark = [False] * (n + 1)
        self.low = [0] * (n + 1)
        self.high = [0] * (n + 1)
        self.b = [0] * (n + 1)
        self.r = [0] * (n + 1)
        self.stats = Stats()
        self.last_report: AffectedReport | None = None
        self.last_derived = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def start(self) -> int:
        return self.graph.start

    @property
    def order_num(self) -> list[int]:
        return self.dom.pre

    def order(self) -> list[int]:
        return self.dom.preorder()

    def low_edge(self, v: int):
        return (self.low[v], v) if self.low[v] else None

    def high_edge(self, v: int):
        return (self.high[v], v) if self.high[v] else None

    def trees(self) -> SpanningTreePair:
        D = self.dom
        members = [v for v in self.graph.vertices() if D.reachable[v] and v != self.start]
        return SpanningTreePair({v: self.b[v] for v in members}, {v: self.r[v] for v in members})

    def _adopt(self, other: "LowHighState") -> None:
        """Take over another state's structures, keeping this state's counters."""
        self.graph = other.graph
        self.dom = other.dom
        self.mark, self.low, self.high = other.mark, other.low, other.high
        self.b, self.r = other.b, other.r
        self.stats.replay_edges += other.stats.replay_edges
        self.stats.fallbacks += other.stats.fallbacks


def _attach_leaf(st: LowHighState, x: int, y: int) -> None:
    D = st.dom
    D.parent[y] = x
    D.children[x].append(y)
    D.depth[y] = D.depth[x] + 1
    D.reachable[y] = True
    st.mark[y] = True
    st.low[y] = st.high[y] = 0
    st.b[y] = st.r[y] = x


def initialize(G: FlowGraph) -> LowHighState:
    """Build a state for ``G`` by replay.

    A DFS tree is laid down first (each tree edge attaches a marked leaf);
    every other edge then goes through :func:`insert_edge`.
    """
    n, s = G.n, G.start
    st = LowHighState(n, s)
    seen = [False] * (n + 1)
    seen[s] = True
    tree = []
    stack = [(s, 0)]
    out = G.out_adj
    while stack:
        v, i = stack[-1]
        if i < len(out[v]):
            stack[-1] = (v, i + 1)
            w = out[v][i]
            if not seen[w]:
                seen[w] = True
                tree.append((v, w))
                stack.append((w, 0))
        else:
            stack.pop()
    for x, y in tree:
        st.graph.add_edge(x, y)
        _attach_leaf(st, x, y)
    st.dom.renumber()
    pending = set(tree)
    for u, v in G.edges():
        if (u, v) in pending:
            pending.discard((u, v))
            continue
        insert_edge(st, u, v)
    st.stats.replay_edges += G.m
    return st


def compute_low_high(G: FlowGraph) -> tuple[DomTree, list[int], SpanningTreePair]:
    st = initialize(G)
    return st.dom, st.order(), st.trees()


def affected_search(state: LowHighState, x: int, y: int) -> AffectedReport:
    """Find the vertices whose immediate dominator changes when ``(x, y)`` is added.

    Bottleneck search from ``y``: a vertex's key is the best minimum depth
    over paths from ``y``; keys are popped in decreasing order from depth
    buckets. A vertex is scanned while its key exceeds ``depth(z) + 1`` and
    is affected when its key equals its own depth.
    """
    D = state.dom
    z = nca(D, x, y)
    depth = D.depth
    rep = AffectedReport(x=x, y=y, z=z)
    if depth[z] >= depth[y] - 1:
        return rep
    rep.c = D.ancestor_at_depth(y, depth[z] + 1)
    threshold = depth[z] + 1
    top = depth[y]
    best = {y: top}
    last = {y: (x, y)}
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    buckets[top].append(y)
    done = set()
    out_adj = state.graph.out_adj
    scanned = rep.scanned
    A = rep.A
    mu = 0
    for key in range(top, threshold, -1):
        bucket = buckets[key]
        while bucket:
            v = bucket.pop()
            if v in done or best[v] != key:
                continue
            done.add(v)
            scanned.append(v)
            if key == depth[v]:
                A.append(v)
            for w in out_adj[v]:
                mu += 1
                k = depth[w]
                if k > key:
                    k = key
                if k > threshold and k > best.get(w, -1):
                    best[w] = k
                    last[w] = (v, w)
                    buckets[k].append(w)
    in_adj = state.graph.in_adj
    for v in A:
        mu += len(in_adj[v])
    rep.last = {v: last[v] for v in A}
    rep.nu = len(scanned)
    rep.mu = mu
    return rep


def _witnesses(state: LowHighState, v: int) -> None:
    D = state.dom
    pre, reach = D.pre, D.reachable
    pv = pre[v]
    d = D.parent[v]
    lo = hi = 0
    for u in state.graph.in_adj[v]:
        if not reach[u] or u == v:
            continue
        if pre[u] < pv:
            if not lo and u != d:
                lo = u
        elif not hi and not D.is_ancestor(v, u):
            hi = u
        if lo and hi:
            break
    state.low[v] = lo
    state.high[v] = hi


def refresh_divergent(state: LowHighState, changed) -> None:
    """Reset the tree parents of ``changed`` from their low/high witnesses."""
    parent = state.dom.parent
    for v in changed:
        state.b[v] = state.low[v] or parent[v]
        state.r[v] = state.high[v] or parent[v]


def _touch_up(state: LowHighState, x: int, y: int) -> None:
    """Local update when ``(x, y)`` leaves the tree unchanged."""
    D = state.dom
    if x == D.parent[y]:
        state.mark[y] = True
    if not state.low[y] and not state.high[y] and x != y and not D.is_ancestor(y, x):
        if D.pre[x] < D.pre[y]:
            if x != D.parent[y]:
                state.low[y] = x
        else:
            state.high[y] = x
        refresh_divergent(state, (y,))


def _restart(state: LowHighState) -> None:
    state.stats.restarts += 1
    state._adopt(initialize(state.graph))


def insert_edge(state: LowHighState, x: int, y: int) -> AffectedReport | None:
    """Insert ``(x, y)`` and update tree, order, marks, witnesses and trees."""
    G = state.graph
    G.add_edge(x, y)
    D = state.dom
    state.last_report = None
    state.last_derived = None
    if not D.reachable[x]:
        return None
    if not D.reachable[y]:
        _restart(state)
        return None
    rep = affected_search(state, x, y)
    state.last_report = rep
    state.stats.nu_total += rep.nu
    state.stats.mu_total += rep.mu
    if not rep.A:
        _touch_up(state, x, y)
        return rep

    z, c, A = rep.z, rep.c, rep.A
    new_children, fallback, GA = derived_low_high(state, rep)
    state.last_derived = GA
    state.stats.derived_calls += 1
    if fallback:
        state.stats.fallbacks += 1

    parent, children = D.parent, D.children
    first = children[z].index(c)
    for v in A:
        children[parent[v]].remove(v)
        parent[v] = z
    children[z] = new_children
    # c and A now sit contiguously where c alone used to be
    D.renumber_block(new_children[first:first + len(A) + 1], c)

    mark = state.mark
    for v in A:
        mark[v] = False
    if z == x:
        mark[y] = True
    changed = list(A)
    changed.append(c)
    for v in changed:
        _witnesses(state, v)
    refresh_divergent(state, changed)
    return rep


def insert_edge_simple(state: LowHighState, x: int, y: int) -> AffectedReport | None:
    """Insert ``(x, y)`` and recompute everything on ``B ∪ R ∪ Last(A) ∪ {(x, y)}``."""
    G = state.graph
    G.add_edge(x, y)
    D = state.dom
    state.last_report = None
    state.last_derived = None
    if not D.reachable[x]:
        return None
    if not D.reachable[y]:
        _restart(state)
        return None
    rep = affected_search(state, x, y)
    state.last_report = rep
    state.stats.nu_total += rep.nu
    state.stats.mu_total += rep.mu
    H = sparse_subgraph(state, rep)
    sub = initialize(H)
    state.stats.recomputes += 1
    state.dom = sub.dom
    state.low, state.high = sub.low, sub.high
    state.b, state.r = sub.b, sub.r
    state.stats.replay_edges += sub.stats.replay_edges
    state.stats.fallbacks += sub.stats.fallbacks
    parent = sub.dom.parent
    reach = sub.dom.reachable
    state.mark = [bool(reach[v] and parent[v] and G.has_edge(parent[v], v)) for v in range(G.n + 1)]
    return rep


def sparse_subgraph(state: LowHighState, rep: AffectedReport) -> FlowGraph:
    """``B ∪ R ∪ Last(A) ∪ {(x, y)}`` as a flow graph on the same vertex ids."""
    D = state.dom
    edges = set()
    for v in state.graph.vertices():
        if D.reachable[v] and v != state.start:
            edges.add((state.b[v], v))
            edges.add((state.r[v], v))
    edges.update(rep.last.values())
    edges.add((rep.x, rep.y))
    return FlowGraph(state.n, state.start, sorted(edges))


def baseline_slt(state: LowHighState, x: int, y: int) -> None:
    """Store the edge; recompute from scratch whenever ``x`` is reachable."""
    state.graph.add_edge(x, y)
    state.last_report = None
    if state.dom.reachable[x]:
        state.stats.recomputes += 1
        state._adopt(initialize(state.graph))


def baseline_slt_nca(state: LowHighState, x: int, y: int) -> None:
    """Recompute only when the nearest-common-ancestor test says the tree changes."""
    state.graph.add_edge(x, y)
    state.last_report = None
    D = state.dom
    if not D.reachable[x]:
        return
    if not D.reachable[y]:
        state.stats.restarts += 1
        state._adopt(initialize(state.graph))
        return
    z = nca(D, x, y)
    if D.depth[z] < D.depth[y] - 1:
        state.stats.recomputes += 1
        state._adopt(initialize(state.graph))
        return
    _touch_up(state, x, y)


VARIANTS = {
    "efficient": insert_edge,
    "simple": insert_edge_simple,
    "slt": baseline_slt,
    "slt_nca": baseline_slt_nca,
}


def check_ids(state: LowHighState, x: int, y: int) -> None:
    n = state.n
    if not (1 <= x <= n and 1 <= y <= n):
        raise IdOutOfRange(f"edge ({x},{y}) outside [1, {n}]")

"""Dominator trees: static computation, brute-force oracle, ancestry and certification."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import FlowGraph


class Unreachable(ValueError):
    pass


class NoChildren(ValueError):
    pass


class DomTree:
    """Rooted tree over the reachable vertices of a flow graph.

    ``parent[v]`` is 0 for the root and for unreachable vertices. ``pre`` and
    ``post`` are 0-based preorder/postorder positions (-1 if unreachable)
    from a DFS that visits ``children[v]`` in list order, so the preorder is
    also the order δ encoded by the children lists.
    """

    def __init__(self, n: int, root: int):
        self.n = n
        self.root = root
        self.parent = [0] * (n + 1)
        self.depth = [-1] * (n + 1)
        self.children: list[list[int]] = [[] for _ in range(n + 1)]
        self.pre = [-1] * (n + 1)
        self.post = [-1] * (n + 1)
        self.size = [0] * (n + 1)
        self.reachable = [False] * (n + 1)
        self.order: list[int] = []

    @classmethod
    def from_parent(cls, n: int, root: int, parent: Sequence[int] | dict, members=None) -> "DomTree":
        """Build a tree from a parent map; children are ordered by id.

        ``members`` lists the vertices meant to be in the tree (default: root
        plus every vertex with a nonzero parent). Members that cannot be
        reached from the root through the map stay flagged unreachable.
        """
        T = cls(n, root)
        get = parent.get if isinstance(parent, dict) else (lambda v, _d=0: parent[v])
        if members is None:
            members = [root] + [v for v in range(1, n + 1) if v != root and get(v, 0)]
        for v in sorted(members):
            if v == root:
                continue
            p = get(v, 0)
            if p:
                T.parent[v] = p
                T.children[p].append(v)
        T.renumber()
        return T

    def renumber(self) -> None:
        """Recompute depth, pre, post, size and reachability from the children lists."""
        n = self.n
        self.reachable = [False] * (n + 1)
        self.depth = [-1] * (n + 1)
        self.pre = [-1] * (n + 1)
        self.post = [-1] * (n + 1)
        self.size = [0] * (n + 1)
        self.order = []
        self._number_block([self.root], 0, 0, 0)

    def _number_block(self, tops: Sequence[int], top_depth: int, pre_base: int, post_base: int) -> None:
        """Number the subtrees of ``tops`` consecutively from the given bases."""
        children = self.children
        depth, pre, post, size, reach = self.depth, self.pre, self.post, self.size, self.reachable
        order = self.order
        append = pre_base == len(order)
        counter = pre_base
        pcounter = post_base
        for top in tops:
            depth[top] = top_depth
            pre[top] = counter
            reach[top] = True
            if append:
                order.append(top)
            else:
                order[counter] = top
            counter += 1
            stack = [(top, 0)]
            while stack:
                v, i = stack[-1]
                ch = children[v]
                if i < len(ch):
                    stack[-1] = (v, i + 1)
                    w = ch[i]
                    depth[w] = depth[v] + 1
                    pre[w] = counter
                    reach[w] = True
                    if append:
                        order.append(w)
                    else:
                        order[counter] = w
                    counter += 1
                    stack.append((w, 0))
                else:
                    stack.pop()
                    post[v] = pcounter
                    pcounter += 1
                    size[v] = counter - pre[v]

    def renumber_block(self, tops: Sequence[int], old_top: int) -> None:
        """Renumber ``tops`` (siblings) into the pre/post block formerly held by ``old_top``'s subtree.

        The subtrees of ``tops`` must together hold exactly the vertices of
        the old subtree of ``old_top``.
        """
        pre_base = self.pre[old_top]
        post_base = self.post[old_top] - self.size[old_top] + 1
        self._number_block(tops, self.depth[old_top], pre_base, post_base)

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` is an ancestor of ``v`` (reflexive)."""
        return self.pre[u] <= self.pre[v] and self.post[v] <= self.post[u]

    def preorder(self) -> list[int]:
        return list(self.order)

    def parent_map(self) -> dict[int, int]:
        return {v: self.parent[v] for v in range(1, self.n + 1) if self.reachable[v] and v != self.root}

    def ancestor_at_depth(self, v: int, d: int) -> int:
        while self.depth[v] > d:
            v = self.parent[v]
        return v

    def path_from_root(self, v: int) -> list[int]:
        path = []
        while v:
            path.append(v)
            v = self.parent[v]
        path.reverse()
        return path

    def copy(self) -> "DomTree":
        T = DomTree(self.n, self.root)
        T.parent = list(self.parent)
        T.depth = list(self.depth)
        T.children = [list(c) for c in self.children]
        T.pre = list(self.pre)
        T.post = list(self.post)
        T.size = list(self.size)
        T.reachable = list(self.reachable)
        T.order = list(self.order)
        return T

    def __repr__(self) -> str:
        return f"DomTree(root={self.root}, parent={self.parent_map()})"


def reachable_from(G: FlowGraph, s: int | None = None, avoid: int = 0) -> list[bool]:
    s = G.start if s is None else s
    seen = [False] * (G.n + 1)
    if s == avoid:
        return seen
    seen[s] = True
    queue = deque([s])
    out = G.out_adj
    while queue:
        u = queue.popleft()
        for v in out[u]:
            if not seen[v] and v != avoid:
                seen[v] = True
                queue.append(v)
    return seen


def compute_dominators(G: FlowGraph) -> DomTree:
    """Immediate dominators by Lengauer-Tarjan with simple path compression."""
    n, s = G.n, G.start
    out_adj, in_adj = G.out_adj, G.in_adj
    num = [-1] * (n + 1)
    vertex = []
    dfs_parent = []
    stack = [(s, 0)]
    num[s] = 0
    vertex.append(s)
    dfs_parent.append(-1)
    while stack:
        v, i = stack[-1]
        succ = out_adj[v]
        if i < len(succ):
            stack[-1] = (v, i + 1)
            w = succ[i]
            if num[w] < 0:
                num[w] = len(vertex)
                vertex.append(w)
                dfs_parent.append(num[v])
                stack.append((w, 0))
        else:
            stack.pop()

    N = len(vertex)
    semi = list(range(N))
    label = list(range(N))
    ancestor = [-1] * N
    idom = [0] * N
    bucket: list[list[int]] = [[] for _ in range(N)]

    def evaluate(v: int) -> int:
        if ancestor[v] < 0:
            return v
        path = []
        u = v
        while ancestor[ancestor[u]] >= 0:
            path.append(u)
            u = ancestor[u]
        for u in reversed(path):
            a = ancestor[u]
            if semi[label[a]] < semi[label[u]]:
                label[u] = label[a]
            ancestor[u] = ancestor[a]
        return label[v]

    for w in range(N - 1, 0, -1):
        for pv in in_adj[vertex[w]]:
            v = num[pv]
            if v < 0:
                continue
            u = evaluate(v)
            if semi[u] < semi[w]:
                semi[w] = semi[u]
        bucket[semi[w]].append(w)
        p = dfs_parent[w]
        ancestor[w] = p
        for v in bucket[p]:
            u = evaluate(v)
            idom[v] = u if semi[u] < semi[v] else p
        bucket[p] = []
    for w in range(1, N):
        if idom[w] != semi[w]:
            idom[w] = idom[idom[w]]

    parent = [0] * (n + 1)
    for w in range(1, N):
        parent[vertex[w]] = vertex[idom[w]]
    return DomTree.from_parent(n, s, parent, members=vertex)


def brute_force_dominator_sets(G: FlowGraph) -> dict[int, set[int]]:
    """Dominator set of every reachable vertex by delete-and-test sweeps."""
    s = G.start
    base = reachable_from(G)
    reach = [v for v in G.vertices() if base[v]]
    doms = {w: {w, s} for w in reach}
    for v in reach:
        if v == s:
            continue
        seen = reachable_from(G, s, avoid=v)
        for w in reach:
            if w != v and not seen[w]:
                doms[w].add(v)
    return doms


def brute_force_dominators(G: FlowGraph) -> DomTree:
    doms = brute_force_dominator_sets(G)
    parent = [0] * (G.n + 1)
    for w, ds in doms.items():
        if w == G.start:
            continue
        # the deepest proper dominator has a dominator set one smaller than w's
        target = len(ds) - 1
        for d in ds:
            if d != w and len(doms[d]) == target:
                parent[w] = d
                break
    return DomTree.from_parent(G.n, G.start, parent, members=list(doms))


def nca(D: DomTree, u: int, v: int) -> int:
    if not (D.reachable[u] and D.reachable[v]):
        raise Unreachable(f"nca({u},{v}) needs reachable vertices")
    depth, parent = D.depth, D.parent
    while depth[u] > depth[v]:
        u = parent[u]
    while depth[v] > depth[u]:
        v = parent[v]
    while u != v:
        u, v = parent[u], parent[v]
    return u


def is_descendant(D: DomTree, u: int, v: int) -> bool:
    """True iff ``u`` lies in the subtree of ``v``."""
    if not (D.reachable[u] and D.reachable[v]):
        raise Unreachable(f"is_descendant({u},{v}) needs reachable vertices")
    return D.is_ancestor(v, u)


def derived_graph(G: FlowGraph, D: DomTree, w: int) -> FlowGraph:
    """Flow graph on ``w`` and its children with every edge entering a child
    projected onto the child of ``w`` above its source. Ids are kept; other
    vertices are left isolated."""
    kids = D.children[w]
    if not kids:
        raise NoChildren(f"vertex {w} has no children in the dominator tree")
    child_depth = D.depth[w] + 1
    seen = set()
    H = FlowGraph(G.n, w)
    for u in kids:
        for v in G.in_adj[u]:
            if not D.reachable[v] or D.is_ancestor(u, v):
                continue
            src = v if v == w else D.ancestor_at_depth(v, child_depth)
            if (src, u) not in seen:
                seen.add((src, u))
                H.add_edge(src, u)
    return H


def preorder_violation(T: DomTree, order: Sequence[int]) -> str | None:
    """Why ``order`` is not a preorder of ``T``, or None."""
    members = [v for v in range(1, T.n + 1) if T.reachable[v]]
    if len(order) != len(members) or set(order) != set(members):
        return "order does not list exactly the tree vertices"
    if order[0] != T.root:
        return "order does not start at the root"
    stack = [T.root]
    for v in order[1:]:
        p = T.parent[v]
        while stack and stack[-1] != p:
            stack.pop()
        if not stack:
            return f"vertex {v} is not contiguous with its parent's subtree"
        stack.append(v)
    return None


def low_high_violations(G: FlowGraph, T: DomTree, order: Sequence[int], limit: int = 1) -> list[int]:
    """Vertices for which ``order`` fails the low-high condition w.r.t. tree ``T``."""
    pos = [-1] * (G.n + 1)
    for i, v in enumerate(order):
        pos[v] = i
    bad = []
    for v in order[1:]:
        d = T.parent[v]
        if G.has_edge(d, v):
            continue
        low = high = False
        pv = pos[v]
        for u in G.in_adj[v]:
            pu = pos[u]
            if pu < 0:
                continue
            if pu < pv:
                low = True
            elif pu > pv and not T.is_ancestor(v, u):
                high = True
        if not (low and high):
            bad.append(v)
            if len(bad) >= limit:
                break
    return bad


def has_parent_property(G: FlowGraph, T: DomTree) -> bool:
    for v, w in G.edges():
        if T.reachable[v] and T.reachable[w] and w != T.root:
            if not T.is_ancestor(T.parent[w], v):
                return False
    return True


def certify_dominator_tree(G: FlowGraph, T: DomTree, order: Sequence[int]) -> bool:
    """Check a claimed dominator tree with a low-high order as certificate."""
    reach = reachable_from(G)
    if T.root != G.start:
        return False
    if any(reach[v] != T.reachable[v] for v in G.vertices()):
        return False
    if not has_parent_property(G, T):
        return False
    if preorder_violation(T, order) is not None:
        return False
    return not low_high_violations(G, T, order)

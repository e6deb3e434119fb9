"""Flow-graph storage, parsing and reversal.

Vertices are dense 1-based integers; 0 is the null vertex. Parallel edges
and self-loops are stored verbatim.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph text. Carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class IdOutOfRange(ValueError):
    pass


class FlowGraph:
    """Mutable digraph with a start vertex.

    ``out_adj[u]`` and ``in_adj[v]`` are plain lists indexed by vertex id;
    slot 0 is unused.
    """

    def __init__(self, n: int, start: int = 1, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("a flow graph needs at least one vertex")
        if not 1 <= start <= n:
            raise IdOutOfRange(f"start vertex {start} not in [1, {n}]")
        self.n = n
        self.start = start
        self.m = 0
        self.out_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self._mult: Counter = Counter()
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise IdOutOfRange(f"edge ({u},{v}) outside [1, {self.n}]")
        self.out_adj[u].append(v)
        self.in_adj[v].append(u)
        self._mult[(u, v)] += 1
        self.m += 1

    def has_edge(self, u: int, v: int) -> bool:
        return self._mult.get((u, v), 0) > 0

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((u, v), 0)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self.out_adj[u]:
                yield u, v

    def edge_multiset(self) -> Counter:
        return Counter(self._mult)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def copy(self) -> "FlowGraph":
        return FlowGraph(self.n, self.start, self.edges())

    def subgraph_without(self, x: int) -> "FlowGraph":
        """Same vertex ids, every edge touching ``x`` dropped."""
        return FlowGraph(self.n, self.start, ((u, v) for u, v in self.edges() if u != x and v != x))

    def __repr__(self) -> str:
        return f"FlowGraph(n={self.n}, m={self.m}, start={self.start})"


def insert_raw_edge(G: FlowGraph, u: int, v: int) -> None:
    G.add_edge(u, v)


def reverse(G: FlowGraph) -> FlowGraph:
    return FlowGraph(G.n, G.start, ((v, u) for u, v in G.edges()))


def _tokens(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def load_graph(text, format: str = "edgelist") -> FlowGraph:
    """Parse an edge list or DIMACS arc file into a :class:`FlowGraph`.

    Edge list: header ``n m``, optional ``s <id>``, then ``u v`` pairs;
    ``#`` lines are comments. DIMACS: ``p <name> n m``, ``a u v`` arcs,
    ``c`` comments and optional ``n <id> s`` for the source.
    """
    if format == "edgelist":
        return _load_edgelist(text)
    if format == "dimacs":
        return _load_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def _build(n, m, start, edges, last_line):
    if n is None:
        raise ParseError(last_line, "missing header")
    if len(edges) != m:
        raise ParseError(last_line, f"header announces {m} edges, found {len(edges)}")
    if not 1 <= start[0] <= n:
        raise IdOutOfRange(f"line {start[1]}: start vertex {start[0]} not in [1, {n}]")
    G = FlowGraph(n, start[0])
    for lineno, u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise IdOutOfRange(f"line {lineno}: edge ({u},{v}) outside [1, {n}]")
        G.add_edge(u, v)
    return G


def _load_edgelist(text) -> FlowGraph:
    n = m = None
    start = (1, 0)
    edges = []
    lineno = 0
    for lineno, toks in _tokens(text):
        if toks[0].startswith("#"):
            continue
        if n is None:
            if len(toks) != 2:
                raise ParseError(lineno, "header must be 'n m'")
            n, m = _int(toks[0], lineno), _int(toks[1], lineno)
            if n < 1 or m < 0:
                raise ParseError(lineno, "header needs n >= 1 and m >= 0")
        elif toks[0] == "s":
            if len(toks) != 2 or edges:
                raise ParseError(lineno, "'s <id>' must precede the edges")
            start = (_int(toks[1], lineno), lineno)
        else:
            if len(toks) != 2:
                raise ParseError(lineno, "edge line must be 'u v'")
            edges.append((lineno, _int(toks[0], lineno), _int(toks[1], lineno)))
    return _build(n, m, start, edges, lineno)


def _load_dimacs(text) -> FlowGraph:
    n = m = None
    start = (1, 0)
    edges = []
    lineno = 0
    for lineno, toks in _tokens(text):
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if len(toks) != 4 or n is not None:
                raise ParseError(lineno, "problem line must be 'p <name> n m'")
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
        elif kind == "a":
            if n is None:
                raise ParseError(lineno, "arc before problem line")
            if len(toks) < 3:
                raise ParseError(lineno, "arc line must be 'a u v'")
            edges.append((lineno, _int(toks[1], lineno), _int(toks[2], lineno)))
        elif kind == "n":
            if len(toks) == 3 and toks[2] == "s":
                start = (_int(toks[1], lineno), lineno)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    return _build(n, m, start, edges, lineno)


def to_edgelist(G: FlowGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    if G.start != 1:
        lines.append(f"s {G.start}")
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> FlowGraph:
    with open(path, "rb") as fh:
        data = fh.read()
    fmt = "dimacs" if str(path).endswith((".dimacs", ".gr", ".max")) else "edgelist"
    return load_graph(data, fmt)

"""Benchmark harness: workloads, algorithm selection, optional verification, CSV rows."""

from __future__ import annotations

import csv
import io
import math
import os
import time
from dataclasses import dataclass, field

from .checks import VerificationFailure, check_insertion, snapshot
from .graph import FlowGraph, read_graph_file
from .incremental import VARIANTS, Stats, initialize
from .rng import SplitMix64
from .twovcss import is_2vc, lh_z

COLUMNS = ["graph", "n", "m_start", "m_final", "algo", "seconds",
           "nu_total", "mu_total", "restarts", "fallbacks", "verified"]

ALGOS = {"efficient": "efficient", "simple": "simple", "slt": "slt",
         "slt-nca": "slt_nca", "slt_nca": "slt_nca", "lhz": "lhz"}
MODES = ("dynamize", "random", "2vcss")


class SaturatedGraph(ValueError):
    pass


@dataclass
class WorkloadSpec:
    graph: str
    mode: str = "dynamize"
    percent: float = 0.1
    seed: int = 1
    algo: str = "efficient"
    verify: bool = False
    repeats: int = 1
    name: str | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.algo not in ALGOS:
            raise ValueError(f"unknown algorithm {self.algo!r}")
        if self.mode != "2vcss" and not 0 < self.percent < 1:
            raise ValueError("percent must lie strictly between 0 and 1")
        if self.repeats < 1:
            raise ValueError("repeats must be positive")


@dataclass
class Report:
    rows: list[dict] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in self.rows:
            w.writerow(row)
        return buf.getvalue()


def dynamize(G: FlowGraph, percent: float, seed: int) -> tuple[FlowGraph, list[tuple[int, int]]]:
    """Remove ``ceil(percent * m)`` random edges; they become the insertion sequence."""
    if not 0 < percent < 1:
        raise ValueError("percent must lie strictly between 0 and 1")
    edges = list(G.edges())
    k = math.ceil(percent * len(edges))
    rng = SplitMix64(seed)
    picked = rng.sample(k, len(edges))
    removed = set(picked)
    base = FlowGraph(G.n, G.start, (e for i, e in enumerate(edges) if i not in removed))
    return base, [edges[i] for i in picked]


def random_insertions(G: FlowGraph, percent: float, seed: int) -> list[tuple[int, int]]:
    """``ceil(percent * m)`` new edges, skipping loops and pairs already present."""
    k = math.ceil(percent * G.m)
    n = G.n
    present = {e for e in G.edges()}
    rng = SplitMix64(seed)
    seq = []
    free = n * (n - 1) - sum(1 for u, v in present if u != v)
    for _ in range(k):
        if free <= 0:
            raise SaturatedGraph("no missing edge left to insert")
        while True:
            u, v = rng.below(n) + 1, rng.below(n) + 1
            if u != v and (u, v) not in present:
                break
        present.add((u, v))
        free -= 1
        seq.append((u, v))
    return seq


def _workload(G: FlowGraph, spec: WorkloadSpec):
    if spec.mode == "dynamize":
        return dynamize(G, spec.percent, spec.seed)
    return G, random_insertions(G, spec.percent, spec.seed)


def _run_insertions(base: FlowGraph, seq, algo: str, verify: bool):
    state = initialize(base)
    state.stats = Stats()
    insert = VARIANTS[algo]
    elapsed = 0.0
    if not verify:
        t0 = time.perf_counter()
        for x, y in seq:
            insert(state, x, y)
        elapsed = time.perf_counter() - t0
        return state, elapsed
    for i, (x, y) in enumerate(seq):
        before = snapshot(state)
        t0 = time.perf_counter()
        insert(state, x, y)
        elapsed += time.perf_counter() - t0
        check_insertion(before, state, i)
    return state, elapsed


def run_experiment(spec: WorkloadSpec, G: FlowGraph | None = None) -> Report:
    """Run one workload ``spec.repeats`` times and report the mean time.

    Raises :class:`VerificationFailure` in verify mode on the first failing
    check, carrying the insertion index.
    """
    if G is None:
        G = read_graph_file(spec.graph)
    name = spec.name or os.path.basename(str(spec.graph))
    algo = ALGOS[spec.algo]
    if spec.mode == "2vcss" or algo == "lhz":
        return _run_lhz(spec, G, name)

    base, seq = _workload(G, spec)
    total = 0.0
    for _ in range(spec.repeats):
        state, secs = _run_insertions(base, seq, algo, spec.verify)
        total += secs
    st = state.stats
    row = {
        "graph": name, "n": G.n, "m_start": base.m, "m_final": state.graph.m,
        "algo": spec.algo, "seconds": f"{total / spec.repeats:.6f}",
        "nu_total": st.nu_total, "mu_total": st.mu_total,
        "restarts": st.restarts, "fallbacks": st.fallbacks,
        "verified": "pass" if spec.verify else "skip",
    }
    return Report([row])


def _run_lhz(spec: WorkloadSpec, G: FlowGraph, name: str) -> Report:
    total = 0.0
    for _ in range(spec.repeats):
        t0 = time.perf_counter()
        res = lh_z(G)
        total += time.perf_counter() - t0
    verdict = "skip"
    if spec.verify:
        H = res.as_graph(G.n, min(G.vertices()))
        if not is_2vc(H):
            raise VerificationFailure("lhz-2vc")
        if len(res.edges) > 4 * (G.n - 1):
            raise VerificationFailure("lhz-size")
        verdict = "pass"
    row = {
        "graph": name, "n": G.n, "m_start": G.m, "m_final": len(res.edges),
        "algo": "lhz", "seconds": f"{total / spec.repeats:.6f}",
        "nu_total": 0, "mu_total": 0, "restarts": 0, "fallbacks": 0,
        "verified": verdict,
    }
    return Report([row])

"""Exact anti-Ramsey values at desk scale.

The oracle enumerates edge colorings of K_n as set partitions of the edge
list, encoded as restricted-growth strings over colex-ordered edges, and
branch-and-bounds with two prunes:

* rainbow prune: a partial assignment whose edges already contain a rainbow
  copy of the pattern stays bad forever, so the branch dies the moment the
  copy's last edge is colored;
* bound prune: a branch whose class count cannot exceed the incumbent even
  if every remaining edge opens a fresh class is dropped.

Candidates at each edge run from "new class" downward, which drives the
incumbent to near-maximal values within the first few descents.  The
incumbent starts from a detector-verified construction when one exists.

Work splits across threads by fixing restricted-growth prefixes of a small
depth; the compiled kernel releases the GIL, and the shared incumbent only
ever increases through realized leaf values, so the final value is
schedule-independent.  The witness is only guaranteed reproducible at task
count 1.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    BudgetExceeded,
    Coloring,
    InvalidPattern,
    NotConstructible,
    PatternSpec,
    VerificationFailed,
    component_edges,
    edge_count,
    edge_index,
)
from .construct import extremal_for
from .detect import _embed, find_rainbow

SEARCH_MAX_N = 10
PARTITION_MAX_J = 12

WITNESS = "witness"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    prunes_by_rainbow: int
    prunes_by_bound: int
    elapsed: float


@dataclass(frozen=True)
class SearchResult:
    """Outcome of exact_ar.

    With exhausted True the value is exactly AR(n, p); otherwise it is a
    valid lower bound.  witness_coloring is None exactly when the value is
    0 (single-edge patterns, where no rainbow-free coloring exists at all).
    """

    value: int
    witness_coloring: Coloring | None
    exhausted: bool
    stats: SearchStats

    def __post_init__(self) -> None:
        if (self.witness_coloring is None) != (self.value == 0):
            raise VerificationFailed(
                "witness must be present exactly when the value is positive"
            )
        if self.witness_coloring is not None:
            if self.witness_coloring.color_count != self.value:
                raise VerificationFailed(
                    f"witness has {self.witness_coloring.color_count} colors, "
                    f"value is {self.value}"
                )


@dataclass(frozen=True)
class Decision:
    """Outcome of decide_ar_at_least: status is one of WITNESS, REFUTED,
    INCONCLUSIVE; coloring accompanies WITNESS only."""

    status: str
    coloring: Coloring | None
    stats: SearchStats


# ============================================================
# Copy tables
# ============================================================

@lru_cache(maxsize=None)
def pattern_copies(n: int, p: PatternSpec) -> tuple[tuple[int, ...], ...]:
    """All copies of `p` in K_n, each as a sorted tuple of colex edge ids.

    One entry per subgraph (pattern automorphisms are quotiented out by the
    canonical embedding enumeration).
    """
    if p.vertex_count > n:
        raise InvalidPattern(
            f"pattern needs {p.vertex_count} vertices, host has {n}"
        )
    out = []
    for emb in _embed(p.components, 0, tuple(range(n)), (), -1):
        edges: list[int] = []
        for comp, verts in emb:
            edges.extend(edge_index(u, v, n) for u, v in component_edges(comp, verts))
        out.append(tuple(sorted(edges)))
    return tuple(out)


@lru_cache(maxsize=None)
def _copy_tables(n: int, p: PatternSpec):
    """CSR tables for the kernel: copies flattened, plus a grouping of copy
    indices by their largest edge id.  Arrays are shared and read-only."""
    copies = pattern_copies(n, p)
    e_total = edge_count(n)
    cop_ptr = np.zeros(len(copies) + 1, np.int64)
    for i, cp in enumerate(copies):
        cop_ptr[i + 1] = cop_ptr[i] + len(cp)
    cop_edges = np.fromiter(
        (e for cp in copies for e in cp), np.int64, count=int(cop_ptr[-1])
    )
    buckets: list[list[int]] = [[] for _ in range(e_total)]
    for i, cp in enumerate(copies):
        buckets[cp[-1]].append(i)
    by_last_ptr = np.zeros(e_total + 1, np.int64)
    for e in range(e_total):
        by_last_ptr[e + 1] = by_last_ptr[e] + len(buckets[e])
    by_last_idx = np.fromiter(
        (i for b in buckets for i in b), np.int64, count=len(copies)
    )
    return cop_ptr, cop_edges, by_last_ptr, by_last_idx


# ============================================================
# Engines
# ============================================================

@dataclass(frozen=True)
class _JobResult:
    best: int
    hit_target: bool
    nodes: int
    prunes_rainbow: int
    prunes_bound: int
    exhausted: bool
    witness: tuple[int, ...] | None


_NUMBA_KERNEL = None


def _load_kernel():
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is None:
        from ._kernel import run_partition_search

        _NUMBA_KERNEL = run_partition_search
    return _NUMBA_KERNEL


def _run_job_numba(e_total, tables, prefix, inc_cell, stop_cell, find_target, budget):
    kernel = _load_kernel()
    out = np.full(e_total, -1, np.int64)
    best, found, hit, nodes, prr, prb, exhausted = kernel(
        e_total, *tables, prefix, inc_cell, stop_cell,
        np.int64(find_target), np.int64(budget), out,
    )
    witness = tuple(int(x) for x in out) if found else None
    return _JobResult(int(best), bool(hit), int(nodes), int(prr), int(prb),
                      bool(exhausted), witness)


def _run_job_python(e_total, tables, prefix, inc_cell, stop_cell, find_target, budget):
    """Pure-Python mirror of the compiled kernel, same contract bit for bit."""
    cop_ptr, cop_edges, by_last_ptr, by_last_idx = (t.tolist() for t in tables)
    a = [-1] * e_total
    pmax = [-1] * (e_total + 1)
    nxt = [-1] * (e_total + 1)
    depth0 = len(prefix)
    for i in range(depth0):
        a[i] = int(prefix[i])
        pmax[i + 1] = max(pmax[i], a[i])
    best = -1
    witness: tuple[int, ...] | None = None
    hit_target = False
    nodes = prr = prb = 0
    exhausted = True
    d = depth0
    nxt[d] = pmax[d] + 1
    while d >= depth0:
        if stop_cell[0] != 0:
            exhausted = False
            break
        c = nxt[d]
        if c < 0:
            d -= 1
            continue
        inc = int(inc_cell[0])
        top = pmax[d] if pmax[d] > c else c
        if top + 1 + (e_total - d - 1) <= inc:
            prb += 1
            nxt[d] = -1
            continue
        if budget >= 0 and nodes >= budget:
            exhausted = False
            break
        nxt[d] = c - 1
        nodes += 1
        a[d] = c
        dead = False
        for k in range(by_last_ptr[d], by_last_ptr[d + 1]):
            ci = by_last_idx[k]
            mask = 0
            rainbow = True
            for j in range(cop_ptr[ci], cop_ptr[ci + 1]):
                bit = 1 << a[cop_edges[j]]
                if mask & bit:
                    rainbow = False
                    break
                mask |= bit
            if rainbow:
                dead = True
                break
        if dead:
            prr += 1
            continue
        if d + 1 == e_total:
            classes = top + 1
            if classes > inc_cell[0]:
                inc_cell[0] = classes
            if classes > best:
                best = classes
                witness = tuple(a)
            if find_target > 0 and classes >= find_target:
                hit_target = True
                stop_cell[0] = 1
                exhausted = False
                break
            continue
        pmax[d + 1] = top
        d += 1
        nxt[d] = pmax[d] + 1
    return _JobResult(best, hit_target, nodes, prr, prb, exhausted, witness)


# ============================================================
# Job planning
# ============================================================

def _live_prefixes(e_total: int, tables, depth: int) -> list[tuple[int, ...]]:
    """Restricted-growth prefixes of the given depth that survive the
    rainbow prune.  Bound pruning is deliberately not applied here: it
    depends on the incumbent and would make the job set schedule-dependent.
    """
    cop_ptr, cop_edges, by_last_ptr, by_last_idx = (t.tolist() for t in tables)
    out: list[tuple[int, ...]] = []
    a = [-1] * depth
    pmax = [-1] * (depth + 1)
    nxt = [-1] * (depth + 1)
    d = 0
    nxt[0] = 0
    while d >= 0:
        c = nxt[d]
        if c < 0:
            d -= 1
            continue
        nxt[d] = c - 1
        a[d] = c
        dead = False
        for k in range(by_last_ptr[d], by_last_ptr[d + 1]):
            ci = by_last_idx[k]
            mask = 0
            rainbow = True
            for j in range(cop_ptr[ci], cop_ptr[ci + 1]):
                bit = 1 << a[cop_edges[j]]
                if mask & bit:
                    rainbow = False
                    break
                mask |= bit
            if rainbow:
                dead = True
                break
        if dead:
            continue
        top = pmax[d] if pmax[d] > c else c
        if d + 1 == depth:
            out.append(tuple(a))
            continue
        pmax[d + 1] = top
        d += 1
        nxt[d] = top + 1
    return out


def _plan_jobs(e_total: int, tables, tasks: int) -> list[np.ndarray]:
    if tasks <= 1:
        return [np.empty(0, np.int64)]
    want = 4 * tasks
    depth = 0
    prefixes: list[tuple[int, ...]] = [()]
    while len(prefixes) < want and depth < e_total - 1:
        depth += 1
        prefixes = _live_prefixes(e_total, tables, depth)
        if not prefixes:
            # Every assignment of the first `depth` edges already contains a
            # rainbow copy, so the whole tree is leafless.
            return []
    return [np.array(p, np.int64) for p in prefixes]


# ============================================================
# Shared driver
# ============================================================

def _run_all(
    e_total, tables, jobs, inc0, find_target, budget, tasks, engine
) -> tuple[list[_JobResult], bool]:
    """Run every job, sharing one incumbent.  Returns (results, ran_all)
    where ran_all is False when the budget stopped the plan early."""
    runner = _run_job_python if engine == "python" else _run_job_numba
    inc_cell = np.array([inc0], np.int64)
    stop_cell = np.zeros(1, np.int64)
    results: list[_JobResult] = []

    if engine == "python" or tasks <= 1 or len(jobs) <= 1:
        remaining = -1 if budget is None else budget
        for prefix in jobs:
            if stop_cell[0] != 0:
                break
            if budget is not None and remaining <= 0:
                return results, False
            res = runner(e_total, tables, prefix, inc_cell, stop_cell,
                         find_target, remaining)
            results.append(res)
            if budget is not None:
                remaining -= res.nodes
        return results, True

    consumed = 0
    idx = 0
    pending = {}

    def cap() -> int:
        if budget is None:
            return -1
        return max(budget - consumed, 0)

    with ThreadPoolExecutor(max_workers=tasks) as pool:
        while idx < len(jobs) and len(pending) < tasks:
            if budget is not None and consumed >= budget:
                break
            fut = pool.submit(runner, e_total, tables, jobs[idx], inc_cell,
                              stop_cell, find_target, cap())
            pending[fut] = idx
            idx += 1
        while pending:
            done, _ = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                pending.pop(fut)
                res = fut.result()
                results.append(res)
                consumed += res.nodes
            while (
                idx < len(jobs)
                and len(pending) < tasks
                and stop_cell[0] == 0
                and (budget is None or consumed < budget)
            ):
                fut = pool.submit(runner, e_total, tables, jobs[idx], inc_cell,
                                  stop_cell, find_target, cap())
                pending[fut] = idx
                idx += 1
    ran_all = idx == len(jobs) or stop_cell[0] != 0
    return results, ran_all


def _guard(n: int, p: PatternSpec, tasks: int, engine: str) -> None:
    if n > SEARCH_MAX_N:
        raise BudgetExceeded(f"exact search is guarded at n <= {SEARCH_MAX_N}, got {n}")
    if p.vertex_count > n:
        raise InvalidPattern(f"pattern needs {p.vertex_count} vertices, host has {n}")
    if tasks < 1:
        raise ValueError(f"tasks must be >= 1, got {tasks}")
    if engine not in ("auto", "numba", "python"):
        raise ValueError(f"unknown engine {engine!r}")


def _pick_engine(engine: str) -> str:
    if engine != "auto":
        return engine
    try:
        _load_kernel()
    except ImportError:
        return "python"
    return "numba"


def _seed(n: int, p: PatternSpec) -> tuple[int, Coloring]:
    """Detector-verified starting incumbent: a construction when one exists,
    else the monochromatic coloring (rainbow-free for any multi-edge
    pattern)."""
    try:
        rep = extremal_for(n, p, verify_bound=SEARCH_MAX_N)
        return rep.claimed_colors, rep.coloring
    except NotConstructible:
        return 1, Coloring(n, (0,) * edge_count(n))


def _certify(coloring: Coloring, p: PatternSpec, origin: str) -> None:
    outcome = find_rainbow(coloring, p)
    if outcome.witness is not None or not outcome.exhausted:
        raise VerificationFailed(f"{origin} produced a coloring with a rainbow copy")


# ============================================================
# Public operations
# ============================================================

def exact_ar(
    n: int,
    p: PatternSpec,
    *,
    budget: int | None = None,
    tasks: int = 1,
    engine: str = "auto",
) -> SearchResult:
    """Compute AR(n, p) exactly by branch-and-bound.

    Args:
        n: host size, guarded at n <= 10.
        p: the pattern whose rainbow copies are forbidden.
        budget: node budget; None means unlimited.  At task count 1 it is
            exact; with more tasks each job is capped by the budget minus
            the nodes consumed by jobs finished at submission time, so the
            total can overshoot.
        tasks: worker threads; the value is task-count independent, the
            witness only reproducible at tasks=1.
        engine: "auto" (compiled kernel when importable), "numba", "python".

    Returns:
        SearchResult; exhausted False means a budget stop, and the value is
        then only a lower bound.
    """
    _guard(n, p, tasks, engine)
    engine = _pick_engine(engine)
    start = time.perf_counter()
    if p.edge_count == 1:
        # Every coloring uses a color, and one edge of one color is already
        # rainbow: no rainbow-free coloring exists and the maximum is 0.
        stats = SearchStats(0, 0, 0, time.perf_counter() - start)
        return SearchResult(0, None, True, stats)
    seed_value, seed_coloring = _seed(n, p)
    _certify(seed_coloring, p, "seed construction")
    e_total = edge_count(n)
    tables = _copy_tables(n, p)
    jobs = _plan_jobs(e_total, tables, tasks)
    results, ran_all = _run_all(
        e_total, tables, jobs, seed_value, 0, budget, tasks, engine
    )
    best = max((r.best for r in results), default=-1)
    value = max(seed_value, best)
    if best > seed_value:
        for r in results:
            if r.best == best and r.witness is not None:
                witness = Coloring(n, r.witness)
                break
        else:
            raise VerificationFailed("improving job lost its witness")
        _certify(witness, p, "search leaf")
    else:
        value = seed_value
        witness = seed_coloring
    exhausted = ran_all and all(r.exhausted for r in results)
    stats = SearchStats(
        sum(r.nodes for r in results),
        sum(r.prunes_rainbow for r in results),
        sum(r.prunes_bound for r in results),
        time.perf_counter() - start,
    )
    return SearchResult(value, witness, exhausted, stats)


def decide_ar_at_least(
    n: int,
    p: PatternSpec,
    m: int,
    *,
    budget: int | None = None,
    tasks: int = 1,
    engine: str = "auto",
) -> Decision:
    """Decide whether some m-color edge-coloring of K_n has no rainbow p.

    Returns a Decision whose status is WITNESS (with a detector-verified
    coloring of at least m colors), REFUTED (every branch exhausted), or
    INCONCLUSIVE (budget ran out first).

    Raises:
        ValueError: unless 1 <= m <= C(n,2).
    """
    _guard(n, p, tasks, engine)
    e_total = edge_count(n)
    if not 1 <= m <= e_total:
        raise ValueError(f"need 1 <= m <= {e_total}, got {m}")
    engine = _pick_engine(engine)
    start = time.perf_counter()
    if p.edge_count == 1:
        stats = SearchStats(0, 0, 0, time.perf_counter() - start)
        return Decision(REFUTED, None, stats)
    seed_value, seed_coloring = _seed(n, p)
    if seed_value >= m:
        _certify(seed_coloring, p, "seed construction")
        stats = SearchStats(0, 0, 0, time.perf_counter() - start)
        return Decision(WITNESS, seed_coloring, stats)
    tables = _copy_tables(n, p)
    jobs = _plan_jobs(e_total, tables, tasks)
    results, ran_all = _run_all(
        e_total, tables, jobs, m - 1, m, budget, tasks, engine
    )
    stats = SearchStats(
        sum(r.nodes for r in results),
        sum(r.prunes_rainbow for r in results),
        sum(r.prunes_bound for r in results),
        time.perf_counter() - start,
    )
    for r in results:
        if r.hit_target:
            assert r.witness is not None
            witness = Coloring(n, r.witness)
            _certify(witness, p, "decision leaf")
            return Decision(WITNESS, witness, stats)
    if ran_all and all(r.exhausted for r in results):
        return Decision(REFUTED, None, stats)
    return Decision(INCONCLUSIVE, None, stats)


def count_partitions(j: int) -> int:
    """Count the leaves of the unpruned restricted-growth enumeration of j
    items; equals the j-th Bell number.

    Raises:
        BudgetExceeded: if j > 12.
        ValueError: if j < 0.
    """
    if j < 0:
        raise ValueError(f"item count must be nonnegative, got {j}")
    if j > PARTITION_MAX_J:
        raise BudgetExceeded(f"partition enumeration is guarded at j <= {PARTITION_MAX_J}")
    if j == 0:
        return 1
    count = 0
    pmax = [-1] * (j + 1)
    nxt = [-1] * (j + 1)
    d = 0
    nxt[0] = 0
    while d >= 0:
        c = nxt[d]
        if c < 0:
            d -= 1
            continue
        nxt[d] = c - 1
        top = pmax[d] if pmax[d] > c else c
        if d + 1 == j:
            count += 1
            continue
        pmax[d + 1] = top
        d += 1
        nxt[d] = top + 1
    return count


def brute_force_ar(n: int, p: PatternSpec) -> int:
    """Reference maximum with no pruning at all: walk every set partition of
    the edges and keep the best rainbow-free one.  Only sane for C(n,2)
    small; used to validate the pruned search.

    Raises:
        BudgetExceeded: if C(n,2) > 12.
    """
    e_total = edge_count(n)
    if e_total > PARTITION_MAX_J:
        raise BudgetExceeded(
            f"brute force is guarded at C(n,2) <= {PARTITION_MAX_J}"
        )
    if p.vertex_count > n:
        raise InvalidPattern(f"pattern needs {p.vertex_count} vertices, host has {n}")
    copies = pattern_copies(n, p)
    best = 0
    for colors in _all_rgs(e_total):
        if any(len({colors[e] for e in cp}) == len(cp) for cp in copies):
            continue
        best = max(best, max(colors) + 1)
    return best


def _all_rgs(j: int):
    a = [0] * j
    pmax = [-1] * (j + 1)
    nxt = [-1] * (j + 1)
    d = 0
    nxt[0] = 0
    while d >= 0:
        c = nxt[d]
        if c < 0:
            d -= 1
            continue
        nxt[d] = c - 1
        a[d] = c
        top = pmax[d] if pmax[d] > c else c
        if d + 1 == j:
            yield tuple(a)
            continue
        pmax[d + 1] = top
        d += 1
        nxt[d] = top + 1

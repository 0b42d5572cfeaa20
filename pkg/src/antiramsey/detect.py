"""Find rainbow copies of a pattern in an edge-colored K_n, or certify absence.

The detector is a plain backtracking search over component placements with a
used-vertex bitmask and a used-color bitmask.  It is deliberately
single-threaded and deterministic: the witness returned is always the first
one in canonical placement order, and the node budget (a count, never wall
time) makes runs reproducible.

`list_embeddings` is an independent brute-force enumerator built directly on
itertools; it shares no code with `find_rainbow`, so the completeness tests
that compare the two are a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .core import (
    BudgetExceeded,
    Coloring,
    InvalidPattern,
    Kind,
    PatternComponent,
    PatternSpec,
    Witness,
)

Placement = tuple[PatternComponent, tuple[int, ...]]


@dataclass(frozen=True)
class DetectOutcome:
    """Result of find_rainbow.

    witness None with exhausted True means no rainbow copy exists; witness
    None with exhausted False means the budget ran out first.
    """

    witness: Witness | None
    exhausted: bool
    nodes_explored: int


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    reason: str | None = None


class _OutOfBudget(Exception):
    pass


def _eid(u: int, v: int) -> int:
    return v * (v - 1) // 2 + u if u < v else u * (u - 1) // 2 + v


def _search_order(p: PatternSpec) -> list[PatternComponent]:
    # Largest component first for early pruning; the sort is stable, so
    # identical components stay adjacent for the symmetry break.
    return sorted(p.components, key=lambda c: (-c.edges, c.sort_key()))


def find_rainbow(
    coloring: Coloring, p: PatternSpec, budget: int | None = None
) -> DetectOutcome:
    """Search for a rainbow copy of `p` in the colored host.

    Components are placed largest-first.  Runs of identical components are
    symmetry broken by strictly increasing minimal vertices, enforced early:
    every vertex of the repeat component must exceed the previous copy's
    minimum.  Paths fix the lower endpoint below the far endpoint; cycles
    place their minimal vertex first and orient by second-versus-last;
    clique vertices ascend.

    Args:
        coloring: the host coloring of K_n.
        p: target pattern; must fit (vertex count <= n).
        budget: maximum number of vertex-placement attempts, None = unlimited.

    Returns:
        DetectOutcome.  A returned witness always passes verify_witness; a
        None witness with exhausted set means the coloring provably has no
        rainbow copy of p.

    Raises:
        InvalidPattern: if the pattern has more vertices than the host.
    """
    n = coloring.n
    if p.vertex_count > n:
        raise InvalidPattern(
            f"pattern needs {p.vertex_count} vertices, host has {n}"
        )
    comps = _search_order(p)
    colors = coloring.colors
    chosen: list[tuple[int, ...]] = []
    nodes = 0
    limit = -1 if budget is None else int(budget)

    def tick() -> None:
        nonlocal nodes
        if 0 <= limit <= nodes:
            raise _OutOfBudget
        nodes += 1

    def place(ci: int, used_v: int, used_c: int) -> bool:
        if ci == len(comps):
            return True
        comp = comps[ci]
        floor = -1
        if ci > 0 and comp == comps[ci - 1]:
            floor = min(chosen[ci - 1])
        size, kind = comp.size, comp.kind
        seq: list[int] = []

        def grow(cur_v: int, mask: int) -> bool:
            depth = len(seq)
            if depth == size:
                chosen.append(tuple(seq))
                if place(ci + 1, cur_v, used_c | mask):
                    return True
                chosen.pop()
                return False
            if depth == 0:
                lo = floor + 1
            elif kind is Kind.PATH:
                lo = floor + 1
            elif kind is Kind.CYCLE:
                lo = seq[0] + 1
            else:
                lo = seq[-1] + 1
            last = depth == size - 1
            for v in range(lo, n):
                if cur_v >> v & 1:
                    continue
                tick()
                if depth == 0:
                    seq.append(v)
                    if grow(cur_v | 1 << v, mask):
                        return True
                    seq.pop()
                    continue
                if last and kind is Kind.PATH and v <= seq[0]:
                    continue
                if last and kind is Kind.CYCLE and v <= seq[1]:
                    continue
                add = 1 << colors[_eid(seq[-1], v)]
                if (used_c | mask) & add:
                    continue
                new_mask = mask | add
                if kind is Kind.CYCLE and last:
                    close = 1 << colors[_eid(v, seq[0])]
                    if (used_c | new_mask) & close:
                        continue
                    new_mask |= close
                elif kind is Kind.CLIQUE:
                    ok = True
                    for w in seq[:-1]:
                        cw = 1 << colors[_eid(w, v)]
                        if (used_c | new_mask) & cw:
                            ok = False
                            break
                        new_mask |= cw
                    if not ok:
                        continue
                seq.append(v)
                if grow(cur_v | 1 << v, new_mask):
                    return True
                seq.pop()
            return False

        return grow(used_v, 0)

    try:
        found = place(0, 0, 0)
    except _OutOfBudget:
        return DetectOutcome(None, False, nodes)
    if found:
        return DetectOutcome(Witness(tuple(zip(comps, chosen))), True, nodes)
    return DetectOutcome(None, True, nodes)


def verify_witness(coloring: Coloring, p: PatternSpec, w: Witness) -> WitnessCheck:
    """Check a witness without trusting the detector that produced it.

    Validates the component multiset, vertex ranges and distinctness,
    pairwise disjointness across components, and pairwise distinct edge
    colors.  The failure reason is a short code, not an exception.
    """
    n = coloring.n
    got = sorted((c for c, _ in w.placements), key=PatternComponent.sort_key)
    if tuple(got) != p.components:
        return WitnessCheck(False, "pattern-mismatch")
    seen: set[int] = set()
    for comp, verts in w.placements:
        if len(verts) != comp.size:
            return WitnessCheck(False, "size-mismatch")
        if any(not 0 <= v < n for v in verts):
            return WitnessCheck(False, "vertex-range")
        if len(set(verts)) != len(verts):
            return WitnessCheck(False, "repeated-vertex")
        if seen & set(verts):
            return WitnessCheck(False, "vertex-overlap")
        seen.update(verts)
    edge_colors = [coloring.colors[e] for e in w.covered_edges(n)]
    if len(set(edge_colors)) != len(edge_colors):
        return WitnessCheck(False, "repeated-color")
    return WitnessCheck(True)


# ============================================================
# Brute-force embedding oracle
# ============================================================

def list_embeddings(n: int, p: PatternSpec) -> Iterator[tuple[Placement, ...]]:
    """Enumerate every embedding of `p` into K_n up to pattern automorphisms.

    Paths are reversible, cycles rotatable and reflectable, identical
    components interchangeable; each equivalence class is produced exactly
    once, as a tuple of (component, vertex tuple) placements in the pattern's
    normalized component order.

    Raises:
        BudgetExceeded: if n > 8 (combinatorial blowup guard).
        InvalidPattern: if the pattern does not fit the host.
    """
    if n > 8:
        raise BudgetExceeded(f"embedding enumeration is guarded at n <= 8, got {n}")
    if p.vertex_count > n:
        raise InvalidPattern(
            f"pattern needs {p.vertex_count} vertices, host has {n}"
        )
    yield from _embed(p.components, 0, tuple(range(n)), (), -1)


def _comp_placements(
    comp: PatternComponent, avail: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    if comp.kind is Kind.CLIQUE:
        yield from combinations(avail, comp.size)
        return
    if comp.kind is Kind.PATH:
        for subset in combinations(avail, comp.size):
            for perm in permutations(subset):
                if perm[0] < perm[-1]:
                    yield perm
        return
    for subset in combinations(avail, comp.size):
        head = subset[0]  # the minimum, since combinations come sorted
        for perm in permutations(subset[1:]):
            if perm[0] < perm[-1]:
                yield (head,) + perm


def _embed(
    comps: tuple[PatternComponent, ...],
    ci: int,
    avail: tuple[int, ...],
    acc: tuple[Placement, ...],
    prev_min: int,
) -> Iterator[tuple[Placement, ...]]:
    if ci == len(comps):
        yield acc
        return
    comp = comps[ci]
    same_as_prev = ci > 0 and comp == comps[ci - 1]
    for verts in _comp_placements(comp, avail):
        if same_as_prev and min(verts) <= prev_min:
            continue
        rest = tuple(v for v in avail if v not in verts)
        yield from _embed(comps, ci + 1, rest, acc + ((comp, verts),), min(verts))

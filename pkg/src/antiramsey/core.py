"""Shared value types for the anti-Ramsey toolkit.

Everything downstream (formulas, constructions, detection, search) speaks in
terms of the types defined here: colexicographic edge ids on K_n, pattern
specifications (disjoint unions of paths, cycles and cliques), total edge
colorings, and rainbow witnesses.  All types are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


# ============================================================
# Errors
# ============================================================

class InvalidEdge(ValueError):
    """Edge id out of range, or a loop (u == v)."""


class InvalidVertex(ValueError):
    """Vertex index outside [0, n)."""


class InvalidPattern(ValueError):
    """Pattern violates a size constraint or does not fit the host."""


class InvalidConstruction(ValueError):
    """Construction parameters outside the valid range."""


class NotConstructible(Exception):
    """No extremal construction is known for the requested pattern/host."""


class VerificationFailed(Exception):
    """A construction claimed rainbow-freeness but the detector found a witness."""


class BudgetExceeded(Exception):
    """An enumeration guard tripped (input too large for the brute-force path)."""


# ============================================================
# Edge indexing (colexicographic)
# ============================================================

def edge_count(n: int) -> int:
    """Number of edges of K_n."""
    return n * (n - 1) // 2


def edge_index(u: int, v: int, n: int) -> int:
    """Colexicographic id of the edge {u, v} in K_n.

    The edge {u, v} with u < v gets id v*(v-1)/2 + u, so the edges inside
    the first m vertices are exactly the ids below C(m, 2).  This order is
    fixed globally: the search traverses edges by increasing id and witnesses
    are reproducible because of it.

    Args:
        u: one endpoint, in [0, n).
        v: the other endpoint, in [0, n).
        n: number of vertices of the host K_n.

    Returns:
        The edge id, in [0, C(n, 2)).

    Raises:
        InvalidEdge: if u == v.
        InvalidVertex: if an endpoint is outside [0, n).
    """
    if u == v:
        raise InvalidEdge(f"loop at vertex {u}")
    if not (0 <= u < n) or not (0 <= v < n):
        raise InvalidVertex(f"vertex out of range for n={n}: ({u}, {v})")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_endpoints(eid: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index: returns (u, v) with u < v.

    Raises:
        InvalidEdge: if eid is outside [0, C(n, 2)).
    """
    if not (0 <= eid < edge_count(n)):
        raise InvalidEdge(f"edge id {eid} out of range for n={n}")
    # v is the largest integer with v*(v-1)/2 <= eid
    v = int((1 + math.isqrt(1 + 8 * eid)) // 2)
    while v * (v - 1) // 2 > eid:
        v -= 1
    u = eid - v * (v - 1) // 2
    return u, v


def all_edges(n: int) -> list[tuple[int, int]]:
    """All edges of K_n as (u, v) pairs, u < v, in colex order."""
    return [(u, v) for v in range(n) for u in range(v)]


# ============================================================
# Patterns
# ============================================================

class Kind(Enum):
    """Component shape.  Enum order doubles as the canonical kind order."""

    PATH = "P"
    CYCLE = "C"
    CLIQUE = "K"


_KIND_RANK = {Kind.PATH: 0, Kind.CYCLE: 1, Kind.CLIQUE: 2}
_MIN_SIZE = {Kind.PATH: 2, Kind.CYCLE: 3, Kind.CLIQUE: 2}


@dataclass(frozen=True, order=False)
class PatternComponent:
    """One connected piece of a pattern: a path, cycle, or clique on `size` vertices."""

    kind: Kind
    size: int

    def __post_init__(self) -> None:
        if self.size < _MIN_SIZE[self.kind]:
            raise InvalidPattern(
                f"{self.kind.value}{self.size}: {self.kind.name.lower()} needs "
                f"at least {_MIN_SIZE[self.kind]} vertices"
            )

    @property
    def edges(self) -> int:
        if self.kind is Kind.PATH:
            return self.size - 1
        if self.kind is Kind.CYCLE:
            return self.size
        return self.size * (self.size - 1) // 2

    def sort_key(self) -> tuple[int, int]:
        return (_KIND_RANK[self.kind], -self.size)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.size}"


def _canonical_component(comp: PatternComponent) -> PatternComponent:
    # K2 is P2 and K3 is C3; normalize so dispatch sees one spelling.
    if comp.kind is Kind.CLIQUE and comp.size == 2:
        return PatternComponent(Kind.PATH, 2)
    if comp.kind is Kind.CLIQUE and comp.size == 3:
        return PatternComponent(Kind.CYCLE, 3)
    return comp


@dataclass(frozen=True)
class PatternSpec:
    """A multiset of components defining the target subgraph H.

    Components are normalized on construction: K2 becomes P2, K3 becomes C3,
    and the tuple is sorted kind-major (paths, cycles, cliques) with sizes
    descending.  Two specs describing the same multiset therefore compare
    equal.
    """

    components: tuple[PatternComponent, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidPattern("pattern needs at least one component")
        normalized = tuple(
            sorted(
                (_canonical_component(c) for c in self.components),
                key=PatternComponent.sort_key,
            )
        )
        object.__setattr__(self, "components", normalized)

    @property
    def vertex_count(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def edge_count(self) -> int:
        return sum(c.edges for c in self.components)

    def __str__(self) -> str:
        from .patterns import render_pattern  # local import avoids a cycle

        return render_pattern(self)


def pattern(*components: tuple[Kind, int] | PatternComponent) -> PatternSpec:
    """Convenience builder: pattern((Kind.PATH, 4), (Kind.PATH, 2))."""
    comps = tuple(
        c if isinstance(c, PatternComponent) else PatternComponent(*c)
        for c in components
    )
    return PatternSpec(comps)


def pattern_stats(p: PatternSpec) -> tuple[int, int]:
    """(vertex count, edge count) of a pattern."""
    return p.vertex_count, p.edge_count


# ============================================================
# Colorings
# ============================================================

@dataclass(frozen=True)
class Coloring:
    """A total, surjective edge coloring of K_n.

    `colors[eid]` is the color of the edge with colex id `eid`; colors are
    dense integers 0..color_count-1.  Density is what lets the detector use
    plain bit masks for its used-color set.
    """

    n: int
    colors: tuple[int, ...]
    color_count: int = field(init=False)

    def __post_init__(self) -> None:
        m = max(self.colors) + 1 if self.colors else 0
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "color_count", m)
        report = validate_coloring(self)
        if not report.ok:
            raise ValueError(f"invalid coloring: {report.code}: {report.detail}")

    def color_of(self, u: int, v: int) -> int:
        return self.colors[edge_index(u, v, self.n)]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_coloring; `code` names the first violation found."""

    ok: bool
    code: str | None = None
    detail: str | None = None


def validate_coloring(c: Coloring) -> ValidationReport:
    """Check totality and color surjectivity of a coloring.

    Violations are returned, not raised: MissingEdge when the assignment does
    not cover all C(n, 2) edges, NonContiguousColors when the used colors are
    not exactly {0, ..., m-1}.
    """
    expected = edge_count(c.n)
    if len(c.colors) != expected:
        return ValidationReport(
            False, "MissingEdge",
            f"{len(c.colors)} edges assigned, K_{c.n} has {expected}",
        )
    if c.n >= 2 and expected > 0:
        seen = set(c.colors)
        if min(seen) < 0:
            return ValidationReport(False, "NonContiguousColors", "negative color")
        m = max(seen) + 1
        missing = set(range(m)) - seen
        if missing:
            return ValidationReport(
                False, "NonContiguousColors",
                f"colors up to {m - 1} used but {sorted(missing)[0]} absent",
            )
    return ValidationReport(True)


# ============================================================
# Witnesses
# ============================================================

@dataclass(frozen=True)
class Witness:
    """An embedding of a pattern whose edges carry pairwise distinct colors.

    `placements` pairs each component with the ordered vertex tuple realizing
    it: path vertices in traversal order, cycle vertices in cyclic order,
    clique vertices ascending.
    """

    placements: tuple[tuple[PatternComponent, tuple[int, ...]], ...]

    def covered_edges(self, n: int) -> list[int]:
        """Edge ids used by this witness, in placement order."""
        out: list[int] = []
        for comp, verts in self.placements:
            out.extend(edge_index(u, v, n) for u, v in component_edges(comp, verts))
        return out


def component_edges(
    comp: PatternComponent, verts: tuple[int, ...]
) -> list[tuple[int, int]]:
    """Vertex pairs of a placed component (consecutive / cyclic / complete)."""
    if len(verts) != comp.size:
        raise InvalidPattern(
            f"placement has {len(verts)} vertices, component {comp} needs {comp.size}"
        )
    if comp.kind is Kind.PATH:
        return list(zip(verts, verts[1:]))
    if comp.kind is Kind.CYCLE:
        return list(zip(verts, verts[1:])) + [(verts[-1], verts[0])]
    return [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]]


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of the ambient edge set, by colex id."""

    edges: frozenset[int]

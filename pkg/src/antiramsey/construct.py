"""Extremal colorings: maximum-color edge-colorings of K_n with no rainbow copy.

Three primitive generators (a rainbow clique with one bulk color, a rainbow
vertex cover with one bulk color, and a perfect-matching palette) plus a
dispatcher, `extremal_for`, that picks the construction whose color count
meets the catalog value for the requested pattern and self-verifies it with
the detector at small n.

`clique_plus_two` handles the perfect-matching host (n = 2t, t >= 7).  It is
opt-in via a flag on `extremal_for` and is always detector-verified before
being returned, whatever the verification bound says.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Coloring,
    InvalidConstruction,
    Kind,
    NotConstructible,
    PatternSpec,
    VerificationFailed,
    all_edges,
    edge_count,
)
from .detect import find_rainbow
from .formulas import PROVEN, ar_lookup


@dataclass(frozen=True)
class ConstructionReport:
    """A generated coloring plus the claim it is meant to realize.

    verified is True when the detector exhausted with no rainbow copy, and
    None when verification was skipped because n exceeded the bound.  A
    False value never appears; a failed check raises instead.
    """

    coloring: Coloring
    claimed_colors: int
    verified: bool | None
    target_pattern: PatternSpec
    rule: str

    def __post_init__(self) -> None:
        if self.coloring.color_count != self.claimed_colors:
            raise VerificationFailed(
                f"construction produced {self.coloring.color_count} colors, "
                f"claimed {self.claimed_colors}"
            )


# ============================================================
# Primitive generators
# ============================================================

def rainbow_clique_plus_one(n: int, m: int) -> Coloring:
    """Rainbow K_m on vertices 0..m-1, one shared color everywhere else.

    Colex edge ids below C(m,2) are exactly the edges inside the clique, so
    each such edge keeps its own id as its color and the bulk color is
    C(m,2).  Total: C(m,2)+1 colors.

    Raises:
        InvalidConstruction: unless 2 <= m < n.
    """
    if not 2 <= m < n:
        raise InvalidConstruction(f"need 2 <= m < n, got m={m}, n={n}")
    bulk = edge_count(m)
    colors = [eid if eid < bulk else bulk for eid in range(edge_count(n))]
    return Coloring(n, tuple(colors))


def cover_rainbow_plus_one(n: int, s: int) -> Coloring:
    """Distinct colors on every edge meeting {0..s-1}, one color on the rest.

    Total: C(s,2) + s*(n-s) + 1 colors.

    Raises:
        InvalidConstruction: unless 1 <= s <= n-2.
    """
    if not 1 <= s <= n - 2:
        raise InvalidConstruction(f"need 1 <= s <= n-2, got s={s}, n={n}")
    bulk = edge_count(s) + s * (n - s)
    colors = []
    fresh = 0
    for u, v in all_edges(n):
        if u < s:
            colors.append(fresh)
            fresh += 1
        else:
            colors.append(bulk)
    assert fresh == bulk
    return Coloring(n, tuple(colors))


def matching_classes(n: int) -> Coloring:
    """Color K_n by a 1-factorization: one color per perfect matching.

    Round-robin schedule: vertex n-1 sits still, the others rotate; round r
    pairs n-1 with r and (r+i) with (r-i) mod (n-1).  Total: n-1 colors.

    Raises:
        InvalidConstruction: if n is odd or n < 4.
    """
    if n % 2 or n < 4:
        raise InvalidConstruction(f"need even n >= 4, got {n}")
    colors = [-1] * edge_count(n)
    m = n - 1
    for r in range(m):
        pairs = [(r, m)]
        for i in range(1, n // 2):
            pairs.append(((r + i) % m, (r - i) % m))
        for u, v in pairs:
            if u > v:
                u, v = v, u
            colors[v * (v - 1) // 2 + u] = r
    assert -1 not in colors
    return Coloring(n, tuple(colors))


def clique_plus_two(n: int) -> Coloring:
    """Rainbow K_{n-3} plus two bulk colors arranged so no perfect matching
    is rainbow.

    With x, y, z the three vertices outside the rainbow clique Q, color A
    covers xy, yz, and all edges from x or z into Q; color B covers xz and
    all edges from y into Q.  Any perfect matching either pairs two of
    x, y, z (their edge and the third vertex's edge into Q share a color) or
    sends all three into Q (two A edges).  Total: C(n-3,2) + 2 colors.

    Raises:
        InvalidConstruction: unless n is even and n >= 14.
    """
    if n % 2 or n < 14:
        raise InvalidConstruction(f"need even n >= 14, got {n}")
    x, y, z = n - 3, n - 2, n - 1
    a = edge_count(n - 3)
    b = a + 1
    colors = []
    for u, v in all_edges(n):
        if v < x:
            colors.append(v * (v - 1) // 2 + u)
        elif v == x:
            colors.append(a)
        elif v == y:
            colors.append(a if u == x else b)
        else:
            colors.append(b if u == x else a)
    return Coloring(n, tuple(colors))


def _monochromatic(n: int) -> Coloring:
    return Coloring(n, (0,) * edge_count(n))


# ============================================================
# Dispatch
# ============================================================

def _matching_construction(
    n: int, t: int, use_clique_plus_two: bool
) -> tuple[Coloring, str]:
    """Extremal coloring avoiding a rainbow t-edge matching."""
    if n == 2 * t:
        if t == 2:
            return matching_classes(4), "matching-classes"
        if t >= 7:
            if use_clique_plus_two:
                return clique_plus_two(n), "clique-plus-two"
            raise NotConstructible(
                f"perfect-matching host n={n}: pass use_clique_plus_two=True "
                "to enable the opt-in construction"
            )
        raise NotConstructible(
            f"no construction for a spanning {t}-edge matching at n={n}"
        )
    if t == 1:
        raise NotConstructible(
            "every coloring uses at least one color, so a rainbow single "
            "edge always exists"
        )
    if t == 2:
        return _monochromatic(n), "monochromatic"
    if Fraction(n) <= Fraction(5 * t - 7, 2):
        return rainbow_clique_plus_one(n, 2 * t - 3), "rainbow-clique-plus-one"
    return cover_rainbow_plus_one(n, t - 2), "cover-rainbow-plus-one"


def extremal_for(
    n: int,
    p: PatternSpec,
    *,
    verify_bound: int = 12,
    use_clique_plus_two: bool = False,
) -> ConstructionReport:
    """Build a maximum-color rainbow-free coloring for pattern `p` in K_n.

    The color count is checked against the catalog value, and the detector
    confirms rainbow-freeness whenever n <= verify_bound (the opt-in
    clique_plus_two construction is verified unconditionally).

    Args:
        n: host size.
        p: pattern to avoid.
        verify_bound: largest n at which the detector pass runs.
        use_clique_plus_two: enable the perfect-matching-host construction.

    Raises:
        NotConstructible: when the catalog value is not proven here, or no
            construction for the shape is known.
        VerificationFailed: if the color count misses the catalog value or
            the detector finds a rainbow copy.
    """
    res = ar_lookup(p, n)
    if res.domain_status != PROVEN or res.value is None:
        raise NotConstructible(
            f"no proven target value for {p} at n={n} "
            f"(status: {res.domain_status})"
        )

    sizes = sorted(c.size for c in p.components)
    kinds = {c.kind for c in p.components}
    coloring: Coloring | None = None
    rule = ""
    if kinds == {Kind.PATH} and set(sizes) <= {2, 4}:
        t = sizes.count(2)
        k = sizes.count(4)
        if k == 0:
            coloring, rule = _matching_construction(n, t, use_clique_plus_two)
        elif t == 0 and k == 1:
            if n == 4:
                coloring, rule = matching_classes(4), "matching-classes"
            else:
                # Two colors can never form a rainbow three-edge path.
                coloring, rule = rainbow_clique_plus_one(n, 2), "rainbow-clique-plus-one"
        elif t == 0:
            if n == 4 * k:
                coloring, rule = rainbow_clique_plus_one(n, 4 * k - 2), "rainbow-clique-plus-one"
        else:
            coloring, rule = _matching_construction(n, 2 * k + t, use_clique_plus_two)
    if coloring is None:
        raise NotConstructible(f"no known construction for {p} at n={n}")

    if coloring.color_count != res.value:
        raise VerificationFailed(
            f"{rule} produced {coloring.color_count} colors for {p} at n={n}, "
            f"catalog value is {res.value}"
        )
    verified: bool | None = None
    if n <= verify_bound or rule == "clique-plus-two":
        outcome = find_rainbow(coloring, p)
        if outcome.witness is not None:
            raise VerificationFailed(
                f"{rule} admits a rainbow {p} at n={n}"
            )
        assert outcome.exhausted
        verified = True
    return ConstructionReport(coloring, res.value, verified, p, rule)

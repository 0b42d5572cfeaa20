"""Extremal constructions: color counts, dispatch, and detector verification."""

import pytest
from hypothesis import given, settings, strategies as st

from antiramsey import (
    Coloring,
    InvalidConstruction,
    NotConstructible,
    all_edges,
    ar_lookup,
    clique_plus_two,
    cover_rainbow_plus_one,
    edge_count,
    exact_ar,
    extremal_for,
    find_rainbow,
    matching_classes,
    parse_pattern,
    rainbow_clique_plus_one,
)


# ============================================================
# Primitive generators
# ============================================================

@given(st.integers(min_value=3, max_value=40), st.data())
def test_clique_color_count(n, data):
    m = data.draw(st.integers(min_value=2, max_value=n - 1))
    c = rainbow_clique_plus_one(n, m)
    assert c.color_count == edge_count(m) + 1
    # edges inside the first m vertices are rainbow, everything else is bulk
    for u in range(m):
        for v in range(u + 1, m):
            assert c.color_of(u, v) < edge_count(m)
    assert c.color_of(0, n - 1) == edge_count(m)


@given(st.integers(min_value=3, max_value=40), st.data())
def test_cover_color_count(n, data):
    s = data.draw(st.integers(min_value=1, max_value=n - 2))
    c = cover_rainbow_plus_one(n, s)
    assert c.color_count == edge_count(s) + s * (n - s) + 1
    covered = [c.color_of(u, v) for u, v in all_edges(n) if u < s]
    assert len(set(covered)) == len(covered)


@given(st.integers(min_value=2, max_value=20))
def test_matching_classes_is_a_one_factorization(half):
    n = 2 * half
    c = matching_classes(n)
    assert c.color_count == n - 1
    for color in range(n - 1):
        cls = [e for e in all_edges(n) if c.color_of(*e) == color]
        assert len(cls) == n // 2
        touched = [v for e in cls for v in e]
        assert sorted(touched) == list(range(n))


def test_clique_plus_two_color_count():
    c = clique_plus_two(14)
    assert c.color_count == edge_count(11) + 2


def test_generator_guards():
    with pytest.raises(InvalidConstruction):
        rainbow_clique_plus_one(5, 5)
    with pytest.raises(InvalidConstruction):
        rainbow_clique_plus_one(5, 1)
    with pytest.raises(InvalidConstruction):
        cover_rainbow_plus_one(5, 4)
    with pytest.raises(InvalidConstruction):
        cover_rainbow_plus_one(5, 0)
    with pytest.raises(InvalidConstruction):
        matching_classes(5)
    with pytest.raises(InvalidConstruction):
        matching_classes(2)
    with pytest.raises(InvalidConstruction):
        clique_plus_two(13)
    with pytest.raises(InvalidConstruction):
        clique_plus_two(12)


# ============================================================
# extremal_for dispatch
# ============================================================

def test_spanning_two_p4():
    rep = extremal_for(8, parse_pattern("2P4"))
    assert rep.claimed_colors == 16
    assert rep.rule == "rainbow-clique-plus-one"
    assert rep.verified is True


def test_three_matching():
    rep = extremal_for(7, parse_pattern("3P2"))
    assert rep.claimed_colors == 7
    assert rep.rule == "cover-rainbow-plus-one"
    assert rep.verified is True


def test_small_path():
    rep = extremal_for(4, parse_pattern("P4"))
    assert rep.claimed_colors == 3
    assert rep.rule == "matching-classes"
    assert rep.verified is True
    rep = extremal_for(10, parse_pattern("P4"))
    assert rep.claimed_colors == 2
    assert rep.rule == "rainbow-clique-plus-one"


def test_spanning_three_p4():
    rep = extremal_for(12, parse_pattern("3P4"))
    assert rep.claimed_colors == 46
    assert rep.verified is True


def test_clique_branch_of_matching_construction():
    """The dense regime n <= (5t-7)/2 uses the rainbow clique.

    That regime requires n >= 2t+1 as well, so it is first non-empty at
    t=9, n=19.  Exhaustive detector verification of a 9-edge matching in
    K19 is out of reach, so this case is count-checked only; the same rule
    is detector-verified elsewhere on the 2P4 and 3P4 spanning hosts.
    """
    rep = extremal_for(19, parse_pattern("9P2"))
    assert rep.rule == "rainbow-clique-plus-one"
    assert rep.claimed_colors == ar_lookup(parse_pattern("9P2"), 19).value == 106
    assert rep.verified is None


def test_mixed_reduction():
    rep = extremal_for(9, parse_pattern("P4+2P2"))
    assert rep.rule == "cover-rainbow-plus-one"
    assert rep.claimed_colors == 16
    assert rep.verified is True


def test_pair_matching_is_monochromatic():
    rep = extremal_for(7, parse_pattern("2P2"))
    assert rep.rule == "monochromatic"
    assert rep.claimed_colors == 1
    assert rep.verified is True


def test_spanning_pair_matching():
    rep = extremal_for(4, parse_pattern("2P2"))
    assert rep.rule == "matching-classes"
    assert rep.claimed_colors == 3
    assert rep.verified is True


def test_not_constructible_cases():
    # spanning matchings with 3 <= t <= 6 have a value but no construction
    with pytest.raises(NotConstructible):
        extremal_for(6, parse_pattern("3P2"))
    with pytest.raises(NotConstructible):
        extremal_for(8, parse_pattern("P4+2P2"))
    # a single edge is rainbow under any coloring
    with pytest.raises(NotConstructible):
        extremal_for(5, parse_pattern("P2"))
    # proven value exists for cycles, but no construction is cataloged
    with pytest.raises(NotConstructible):
        extremal_for(10, parse_pattern("C3"))
    # asymptotic-only value: refuse rather than build against a guess
    with pytest.raises(NotConstructible):
        extremal_for(20, parse_pattern("P5"))
    with pytest.raises(NotConstructible):
        extremal_for(9, parse_pattern("2P4"))  # no value off the spanning host


def test_perfect_matching_host_needs_flag():
    with pytest.raises(NotConstructible):
        extremal_for(14, parse_pattern("7P2"))
    rep = extremal_for(14, parse_pattern("7P2"), use_clique_plus_two=True)
    assert rep.rule == "clique-plus-two"
    assert rep.claimed_colors == 57
    assert rep.verified is True


def test_clique_plus_two_is_always_verified():
    rep = extremal_for(
        14, parse_pattern("7P2"), verify_bound=0, use_clique_plus_two=True
    )
    assert rep.verified is True


def test_verify_bound_skip():
    rep = extremal_for(13, parse_pattern("4P2"), verify_bound=12)
    assert rep.verified is None
    assert rep.claimed_colors == ar_lookup(parse_pattern("4P2"), 13).value
    again = extremal_for(13, parse_pattern("4P2"), verify_bound=13)
    assert again.verified is True
    assert again.coloring == rep.coloring


def test_star_on_k4_is_a_negative_control():
    """cover(4,1) has 4 colors, one more than AR(4, 2P2); a witness must exist."""
    c = cover_rainbow_plus_one(4, 1)
    assert c.color_count == 4
    out = find_rainbow(c, parse_pattern("2P2"))
    assert out.witness is not None


def test_single_bulk_vertex_variant_fails():
    """Two bulk colors must straddle the three off-clique vertices.

    The simpler layout (one off-clique vertex's edges on color A, everything
    else outside the clique on color B) admits rainbow perfect matchings:
    pair two outside vertices and send the third into the clique, and the
    matching uses A once, B once, and otherwise distinct clique colors.  The
    shipped clique_plus_two interleaves the bulk colors to kill exactly
    these matchings; this test keeps the broken layout around as a negative
    control.
    """
    n = 14
    x = n - 3
    a = edge_count(n - 3)
    colors = []
    for u, v in all_edges(n):
        if v < x:
            colors.append(v * (v - 1) // 2 + u)
        elif v == x or u == x:
            colors.append(a)
        else:
            colors.append(a + 1)
    broken = Coloring(n, tuple(colors))
    assert broken.color_count == edge_count(n - 3) + 2
    out = find_rainbow(broken, parse_pattern("7P2"))
    assert out.witness is not None


# ============================================================
# Tightness at tiny hosts
# ============================================================

@pytest.mark.parametrize(
    ("n", "text"),
    [(4, "P4"), (4, "2P2"), (5, "P4"), (5, "2P2")],
)
def test_construction_is_extremal_at_tiny_n(n, text):
    """The construction meets the exact search value and is locally maximal.

    Global tightness comes from the oracle: claimed colors equal exact_ar.
    Local maximality is checked directly: recoloring any single edge with a
    fresh color (the minimal way to gain a color class) creates a rainbow
    copy.
    """
    p = parse_pattern(text)
    rep = extremal_for(n, p)
    base = rep.coloring
    assert rep.claimed_colors == exact_ar(n, p).value

    for eid in range(edge_count(n)):
        old = base.colors[eid]
        if sum(1 for c in base.colors if c == old) == 1:
            continue  # recoloring a singleton class only renames it
        colors = list(base.colors)
        colors[eid] = base.color_count
        refined = Coloring(n, tuple(colors))
        assert refined.color_count == base.color_count + 1
        assert find_rainbow(refined, p).witness is not None, (n, text, eid)

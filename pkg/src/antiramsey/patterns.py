"""Tiny text syntax for patterns: ``2P4+3P2``, ``C5``, ``K4+2P2``.

Grammar::

    pattern := term ('+' term)*
    term    := [count] kind size
    kind    := 'P' | 'C' | 'K'

`count` defaults to 1 and must be positive; sizes follow the component rules
(paths >= 2, cycles >= 3, cliques >= 2).  '+' plays the role of disjoint
union and keeps the syntax shell-safe.
"""

from __future__ import annotations

from .core import InvalidPattern, Kind, PatternComponent, PatternSpec

_KIND_LETTERS = {"P": Kind.PATH, "C": Kind.CYCLE, "K": Kind.CLIQUE}


class PatternSyntaxError(ValueError):
    """Malformed pattern text; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_pattern(text: str) -> PatternSpec:
    """Parse pattern text into a normalized PatternSpec.

    Args:
        text: e.g. "2P4+3P2".  Surrounding whitespace is ignored; internal
            whitespace is a syntax error.

    Returns:
        The normalized spec (components sorted kind-major, sizes descending,
        K2/K3 rewritten to P2/C3).

    Raises:
        PatternSyntaxError: on malformed text, with the byte offset.
        InvalidPattern: on semantic errors such as "P1", "C2", "K1" or a
            zero repeat count.
    """
    stripped = text.strip()
    base = text.index(stripped) if stripped else 0
    if not stripped:
        raise PatternSyntaxError("empty pattern", 0)

    comps: list[PatternComponent] = []
    pos = 0
    s = stripped
    while True:
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        count_text = s[start:pos]
        if pos >= len(s):
            raise PatternSyntaxError("expected component kind", base + pos)
        letter = s[pos]
        if letter not in _KIND_LETTERS:
            raise PatternSyntaxError(
                f"expected one of P, C, K, got {letter!r}", base + pos
            )
        kind_at = pos
        pos += 1
        size_start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        size_text = s[size_start:pos]
        if not size_text:
            raise PatternSyntaxError("expected component size", base + pos)

        count = int(count_text) if count_text else 1
        if count < 1:
            raise InvalidPattern(
                f"repeat count must be >= 1 at offset {base + start}"
            )
        size = int(size_text)
        try:
            comp = PatternComponent(_KIND_LETTERS[letter], size)
        except InvalidPattern as exc:
            raise InvalidPattern(f"{exc} (at offset {base + kind_at})") from None
        comps.extend([comp] * count)

        if pos == len(s):
            break
        if s[pos] != "+":
            raise PatternSyntaxError(f"expected '+', got {s[pos]!r}", base + pos)
        pos += 1
        if pos == len(s):
            raise PatternSyntaxError("dangling '+'", base + pos)

    return PatternSpec(tuple(comps))


def render_pattern(spec: PatternSpec) -> str:
    """Render a spec in normalized form; parse_pattern(render_pattern(s)) == s."""
    parts: list[str] = []
    i = 0
    comps = spec.components
    while i < len(comps):
        j = i
        while j < len(comps) and comps[j] == comps[i]:
            j += 1
        count = j - i
        prefix = str(count) if count > 1 else ""
        parts.append(f"{prefix}{comps[i]}")
        i = j
    return "+".join(parts)

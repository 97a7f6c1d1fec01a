"""
Permutations of [n] = {1, ..., n} and their cycle statistics.

Conventions used throughout the package:

- Everything is 1-indexed.  A permutation is stored in one-line notation as
  a tuple ``word`` of length n with ``word[i-1] = pi(i)``; the one-line word
  is the canonical form, cycle decompositions are derived views.
- The *standard cycle decomposition* writes every cycle with its smallest
  element first and orders the cycles by increasing minima, e.g. the word
  3142765 decomposes as (1 3 4 2)(5 7)(6).
- An *excedance* is a position i with pi(i) > i, a *fixed point* one with
  pi(i) = i.  A *cycle descent* is a cycle element c_j, at an interior
  position 1 < j < len(cycle) of its standard cycle, with c_j > c_{j+1};
  cycles of length 1 or 2 contribute none.  For every permutation
  exc + cyc + cdes = n.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "CycleDecomposition",
    "StatRecord",
    "Word",
    "parse_permutation",
    "standard_cycles",
    "cycle_string",
    "statistics",
    "inverse",
    "red",
    "hat",
    "permutation_from_cycles",
    "enumerate_permutations",
    "FAMILIES",
]

# A word is a sequence of pairwise distinct positive integers, not
# necessarily 1..k (for example a cycle read off a larger permutation).
Word = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation; ``word[i-1] = pi(i)``."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image pi(i) of a 1-indexed position."""
        return self.word[i - 1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)

    def __repr__(self) -> str:
        return f"Permutation({self.word!r})"


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles, each smallest-first, ordered by increasing minima."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cycles = tuple(tuple(c) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)
        seen: set[int] = set()
        prev_min = 0
        for cyc in cycles:
            if not cyc:
                raise ValueError("empty cycle")
            if min(cyc) != cyc[0]:
                raise ValueError(f"cycle not smallest-first: {cyc}")
            if cyc[0] <= prev_min:
                raise ValueError("cycle minima not strictly increasing")
            prev_min = cyc[0]
            for v in cyc:
                if v < 1:
                    raise ValueError(f"cycle element out of range: {v}")
                if v in seen:
                    raise ValueError(f"element repeated across cycles: {v}")
                seen.add(v)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for cyc in self.cycles for v in cyc)

    def to_permutation(self) -> Permutation:
        """Rebuild the permutation; the support must be exactly 1..n."""
        support = self.support
        n = len(support)
        if support != frozenset(range(1, n + 1)):
            raise ValueError("support is not a full interval 1..n")
        return permutation_from_cycles(self.cycles, n)

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in self.cycles)


@dataclass(frozen=True)
class StatRecord:
    """Classical statistics of one permutation.

    ``inv1`` is the position of the value 1, i.e. pi^{-1}(1).  ``cdes_set``
    collects the cycle-descent elements themselves (not their positions).
    """

    exc: int
    fix: int
    cyc: int
    cdes: int
    cdes_set: frozenset[int]
    inv1: int


_TOKEN_SPLIT = re.compile(r"[,\s]+")


def _parse_ints(chunk: str, context: str) -> list[int]:
    parts = [p for p in _TOKEN_SPLIT.split(chunk.strip()) if p]
    values = []
    for p in parts:
        try:
            v = int(p)
        except ValueError:
            raise ValueError(f"malformed {context}: {p!r} is not an integer") from None
        if v < 1:
            raise ValueError(f"value out of range in {context}: {v}")
        values.append(v)
    return values


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse one-line notation ("3 1 4 2") or cycle notation ("(1 3 4 2)(5 7)(6)").

    Separators inside a form are whitespace or commas.  Cycle notation may
    omit fixed points only when the total size ``n`` is supplied; a bare
    cycle form must cover 1..n on its own.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "(" in text or ")" in text:
        return _parse_cycle_form(text, n)
    word = _parse_ints(text, "one-line word")
    if n is not None and len(word) != n:
        raise ValueError(f"one-line word has length {len(word)}, expected {n}")
    return Permutation(tuple(word))


def _parse_cycle_form(text: str, n: int | None) -> Permutation:
    pos = 0
    cycles: list[list[int]] = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ValueError(f"malformed parentheses near {text[pos:pos + 8]!r}")
        close = text.find(")", pos)
        if close < 0:
            raise ValueError("malformed parentheses: unclosed '('")
        inner = text[pos + 1 : close]
        if "(" in inner:
            raise ValueError("malformed parentheses: nested '('")
        cyc = _parse_ints(inner, "cycle")
        if not cyc:
            raise ValueError("malformed parentheses: empty cycle")
        cycles.append(cyc)
        pos = close + 1
    seen: set[int] = set()
    for cyc in cycles:
        for v in cyc:
            if v in seen:
                raise ValueError(f"duplicate element: {v}")
            seen.add(v)
    size = max(seen) if n is None else n
    missing = set(range(1, size + 1)) - seen
    if n is None and missing:
        raise ValueError(f"gap in 1..{size} coverage: missing {sorted(missing)}")
    if seen - set(range(1, size + 1)):
        raise ValueError(f"element above size {size}")
    cycles.extend([v] for v in sorted(missing))
    return permutation_from_cycles(cycles, size)


def permutation_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build a permutation of [n] from disjoint cycles (any rotation per cycle)."""
    word = [0] * n
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            word[a - 1] = b
        word[cyc[-1] - 1] = cyc[0]
    if 0 in word:
        uncovered = [i + 1 for i, v in enumerate(word) if v == 0]
        raise ValueError(f"cycles do not cover 1..{n}: missing {uncovered}")
    return Permutation(tuple(word))


def standard_cycles(p: Permutation) -> CycleDecomposition:
    """Standard cycle decomposition: smallest-first cycles, increasing minima."""
    word = p.word
    seen = [False] * (p.n + 1)
    cycles: list[tuple[int, ...]] = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        v = word[start - 1]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = word[v - 1]
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def cycle_string(p: Permutation) -> str:
    return str(standard_cycles(p))


def statistics(p: Permutation) -> StatRecord:
    word = p.word
    exc = sum(1 for i, v in enumerate(word, start=1) if v > i)
    fix = sum(1 for i, v in enumerate(word, start=1) if v == i)
    cdes: set[int] = set()
    cycles = standard_cycles(p).cycles
    for cyc in cycles:
        # interior positions only: j = 2 .. len-1 (1-indexed)
        for j in range(1, len(cyc) - 1):
            if cyc[j] > cyc[j + 1]:
                cdes.add(cyc[j])
    inv1 = word.index(1) + 1 if word else 0
    return StatRecord(
        exc=exc,
        fix=fix,
        cyc=len(cycles),
        cdes=len(cdes),
        cdes_set=frozenset(cdes),
        inv1=inv1,
    )


def inverse(p: Permutation) -> Permutation:
    word = [0] * p.n
    for i, v in enumerate(p.word, start=1):
        word[v - 1] = i
    return Permutation(tuple(word))


def red(entries: Sequence[int]) -> Permutation:
    """Order-isomorphic relabelling of a word with distinct entries onto 1..k.

    >>> red((4, 6, 3)).word
    (2, 3, 1)
    """
    if len(set(entries)) != len(entries):
        raise ValueError(f"duplicate entries in word: {entries}")
    rank = {v: j for j, v in enumerate(sorted(entries), start=1)}
    return Permutation(tuple(rank[v] for v in entries))


def hat(p: Permutation) -> Word:
    """Flattening of the standard cycle decomposition (parentheses erased)."""
    return tuple(v for cyc in standard_cycles(p).cycles for v in cyc)


# ---------------------------------------------------------------------------
# Enumeration streams.  All streams are deterministic and yield one-line
# words in lexicographic order, which keeps exhaustive checks and JSON dumps
# reproducible.

FAMILIES = (
    "all",
    "one_at_i",
    "derangements",
    "derangements_one_at_i",
    "derangements_last_is_i",
)


def _all_perms(n: int) -> Iterator[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def _one_at(n: int, i: int) -> Iterator[Permutation]:
    rest = [v for v in range(1, n + 1) if v != 1]
    for tail in itertools.permutations(rest):
        yield Permutation(tail[: i - 1] + (1,) + tail[i - 1 :])


def _is_derangement(p: Permutation) -> bool:
    return all(v != i for i, v in enumerate(p.word, start=1))


def _last_is(n: int, i: int) -> Iterator[Permutation]:
    rest = [v for v in range(1, n + 1) if v != i]
    for head in itertools.permutations(rest):
        yield Permutation(head + (i,))


def enumerate_permutations(
    family: str, n: int, i: int | None = None
) -> Iterator[Permutation]:
    """Stream a permutation family in lexicographic one-line order.

    Families: ``all``; ``one_at_i`` (pi(i) = 1); ``derangements``;
    ``derangements_one_at_i``; ``derangements_last_is_i`` (pi(n) = i).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family: {family!r}")
    if n < 0:
        raise ValueError("negative size")
    needs_i = family.endswith("_i")
    if needs_i:
        if family in ("one_at_i", "derangements_one_at_i") and n == 0:
            raise ValueError("family requires the value 1 but n = 0")
        if i is None:
            raise ValueError(f"family {family!r} requires an index")
        if not 1 <= i <= n:
            raise ValueError(f"index out of range: i={i}, n={n}")
    if family == "all":
        yield from _all_perms(n)
    elif family == "one_at_i":
        yield from _one_at(n, i)
    elif family == "derangements":
        yield from (p for p in _all_perms(n) if _is_derangement(p))
    elif family == "derangements_one_at_i":
        yield from (p for p in _one_at(n, i) if _is_derangement(p))
    else:
        yield from (p for p in _last_is(n, i) if _is_derangement(p))

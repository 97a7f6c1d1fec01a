"""
Signed permutations and their bijection with Callan perfect matchings.

A signed permutation attaches a sign to every value; ``neg`` holds the
negatively signed values.  It is a *negative cycle descent* permutation
when every negative value is a cycle descent of the underlying
permutation.  Such objects are counted by the y = 2 specialization of the
cycle-descent distribution, and this module realizes the counting
bijection explicitly:

- ``theta``/``theta_inv``: a cyclic negative-cycle-descent permutation of
  1..l versus a *connected* Callan matching of {1..l} x {0, 1}.  The cycle
  is cut into blocks after each positive value; block interiors become
  downlines, consecutive blocks are joined by arcs alternating bottom/top,
  and a final edge at (1, 1) closes the matching.
- ``gamma``/``gamma_inv``: the full correspondence, applying ``theta``
  cyclewise through the order-preserving relabelling of each cycle's
  support.  Components map to cycles (com = cyc) and verticals to fixed
  points (ver = fix).

Notation: ``(1+ 6- 4- 3+ 2+ 8- 7- 5+)`` writes a signed cycle; an omitted
sign means +.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .matchings import (
    Edge,
    MVertex,
    PerfectMatching,
    components,
    edge_class,
    is_callan,
    match_stats,
    mk_matching,
)
from .perms import (
    Permutation,
    enumerate_permutations,
    permutation_from_cycles,
    standard_cycles,
    statistics,
)

__all__ = [
    "SignedPermutation",
    "BlockSeq",
    "is_negative_cdes",
    "enumerate_negative_cdes",
    "blocks",
    "theta",
    "theta_inv",
    "gamma",
    "gamma_inv",
    "parse_signed",
    "format_signed",
    "signed_to_json_dict",
    "signed_from_json_dict",
]


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation plus the set of values carrying sign -1."""

    perm: Permutation
    neg: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "neg", frozenset(self.neg))
        if not self.neg <= frozenset(range(1, self.perm.n + 1)):
            raise ValueError(f"negative values outside 1..{self.perm.n}: {set(self.neg)}")

    @property
    def n(self) -> int:
        return self.perm.n

    def __str__(self) -> str:
        return format_signed(self)


@dataclass(frozen=True)
class BlockSeq:
    """Cycle blocks cut after each positive value; blocks are decreasing."""

    blocks: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "|" + "|".join("".join(str(v) for v in b) for b in self.blocks) + "|"


def is_negative_cdes(sp: SignedPermutation) -> bool:
    """True when every negative value is a cycle descent of the permutation."""
    return sp.neg <= statistics(sp.perm).cdes_set


def enumerate_negative_cdes(
    n: int, flt: str = "all"
) -> Iterator[SignedPermutation]:
    """Stream all (pi, S) with S a subset of the cycle descents of pi.

    ``flt`` is ``all`` or ``derangement``.  Permutations come in
    lexicographic order; for each, sign subsets count up in binary over
    the sorted descent values.
    """
    if flt not in ("all", "derangement"):
        raise ValueError(f"unknown filter: {flt!r}")
    if n > 7:
        raise ValueError(f"signed enumeration capped at n <= 7, got {n}")
    family = "derangements" if flt == "derangement" else "all"
    for p in enumerate_permutations(family, n):
        descents = sorted(statistics(p).cdes_set)
        for mask in range(1 << len(descents)):
            chosen = frozenset(d for k, d in enumerate(descents) if mask >> k & 1)
            yield SignedPermutation(perm=p, neg=chosen)


def blocks(cycle: Sequence[int], neg: Sequence[int] | frozenset[int]) -> BlockSeq:
    """Cut a smallest-first cycle into blocks after each positive value.

    Negative values must be interior descents of the cycle, which forces
    every block, read in cycle order, to be strictly decreasing; the first
    block is always the singleton holding the cycle minimum.
    """
    cycle = tuple(cycle)
    neg = frozenset(neg)
    if not cycle:
        raise ValueError("empty cycle")
    if min(cycle) != cycle[0]:
        raise ValueError(f"cycle not smallest-first: {cycle}")
    if cycle[0] in neg:
        raise ValueError("the cycle minimum cannot carry a negative sign")
    if cycle[-1] in neg:
        raise ValueError("the last cycle element cannot carry a negative sign")
    out: list[tuple[int, ...]] = []
    block: list[int] = []
    for v in cycle:
        block.append(v)
        if v not in neg:
            out.append(tuple(block))
            block = []
    for b in out:
        if any(a <= c for a, c in zip(b, b[1:])):
            raise ValueError(f"negative signs do not follow the descents: block {b}")
    return BlockSeq(blocks=tuple(out))


def theta(sp: SignedPermutation) -> PerfectMatching:
    """Connected Callan matching of a cyclic negative-cdes permutation.

    Step 1 turns each block (b_1 > ... > b_t) into downlines
    (b_j, 0)-(b_{j+1}, 1).  Step 2 joins block k to block k+1 with a
    bottom arc between the block minima for odd k and a top arc between
    the block maxima for even k.  Step 3 closes at (1, 1): a downline (or
    vertical) to the last block's minimum when the block count is odd, a
    top arc to its maximum when even.
    """
    if not is_negative_cdes(sp):
        raise ValueError("negative signs are not all cycle descents")
    cycles = standard_cycles(sp.perm).cycles
    if len(cycles) != 1:
        raise ValueError(f"not cyclic: {len(cycles)} cycles")
    seq = blocks(cycles[0], sp.neg).blocks
    k = len(seq)
    edges: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for block in seq:
        for a, b in zip(block, block[1:]):
            edges.append(((a, 0), (b, 1)))
    for idx in range(1, k):  # joins block idx to block idx+1 (1-based)
        cur, nxt = seq[idx - 1], seq[idx]
        if idx % 2 == 1:
            edges.append(((cur[-1], 0), (nxt[-1], 0)))
        else:
            edges.append(((cur[0], 1), (nxt[0], 1)))
    last = seq[-1]
    if k % 2 == 1:
        edges.append(((1, 1), (last[-1], 0)))
    else:
        edges.append(((1, 1), (last[0], 1)))
    return mk_matching(range(1, sp.n + 1), edges)


def theta_inv(m: PerfectMatching) -> SignedPermutation:
    """Inverse of :func:`theta` on connected Callan matchings of 1..l.

    Deleting the edge at (1, 1) and identifying the two rows leaves a path
    starting at 1.  Bars go after every path step that crosses an arc (and
    at the end); each bar-delimited block, sorted decreasingly, becomes a
    run of the cycle, with the block minimum positive and the rest
    negative.
    """
    l = m.n
    if m.support != tuple(range(1, l + 1)) or l == 0:
        raise ValueError("support must be exactly 1..l")
    if not is_callan(m):
        raise ValueError("matching has uplines")
    if match_stats(m).com != 1:
        raise ValueError("matching is not connected")
    if l == 1:
        return SignedPermutation(perm=Permutation((1,)), neg=frozenset())

    start = MVertex(1, 1)
    deleted = next(e for e in m.edges if start in e)
    adjacency: dict[int, list[tuple[int, Edge]]] = {i: [] for i in m.support}
    for e in m.edges:
        if e == deleted:
            continue
        a, b = e
        adjacency[a.index].append((b.index, e))
        adjacency[b.index].append((a.index, e))

    path = [1]
    links: list[Edge] = []
    used: set[Edge] = set()
    cur = 1
    for _ in range(l - 1):
        nxt, edge = next(
            (other, e) for other, e in adjacency[cur] if e not in used
        )
        used.add(edge)
        path.append(nxt)
        links.append(edge)
        cur = nxt

    raw_blocks: list[list[int]] = []
    block: list[int] = [path[0]]
    for step, edge in enumerate(links):
        if edge_class(edge) == "arc":
            raw_blocks.append(block)
            block = []
        block.append(path[step + 1])
    raw_blocks.append(block)

    cycle: list[int] = []
    neg: set[int] = set()
    for b in raw_blocks:
        ordered = sorted(b, reverse=True)
        cycle.extend(ordered)
        neg.update(ordered[:-1])
    perm = permutation_from_cycles([cycle], l)
    return SignedPermutation(perm=perm, neg=frozenset(neg))


def _relabel_edges(m: PerfectMatching, mapping: dict[int, int]) -> list[Edge]:
    return [
        (MVertex(mapping[a.index], a.row), MVertex(mapping[b.index], b.row))
        for a, b in m.edges
    ]


def gamma(sp: SignedPermutation) -> PerfectMatching:
    """Callan matching of a negative-cdes permutation, built cyclewise.

    Each standard cycle is relabelled onto 1..len (signs travel with the
    values), pushed through :func:`theta`, relabelled back, and the edge
    sets are united.  Components correspond to cycles and vertical lines
    to fixed points.
    """
    if not is_negative_cdes(sp):
        raise ValueError("negative signs are not all cycle descents")
    edges: list[Edge] = []
    for cyc in standard_cycles(sp.perm).cycles:
        support = sorted(cyc)
        down = {v: r for r, v in enumerate(support, start=1)}
        up = {r: v for v, r in down.items()}
        local = SignedPermutation(
            perm=permutation_from_cycles([tuple(down[v] for v in cyc)], len(cyc)),
            neg=frozenset(down[v] for v in cyc if v in sp.neg),
        )
        edges.extend(_relabel_edges(theta(local), up))
    return mk_matching(range(1, sp.n + 1), edges)


def gamma_inv(m: PerfectMatching) -> SignedPermutation:
    """Inverse of :func:`gamma` on Callan matchings of 1..n."""
    if m.support != tuple(range(1, m.n + 1)):
        raise ValueError("support must be exactly 1..n")
    if not is_callan(m):
        raise ValueError("matching has uplines")
    cycles: list[tuple[int, ...]] = []
    neg: set[int] = set()
    for comp in components(m):
        support = list(comp.support)
        down = {v: r for r, v in enumerate(support, start=1)}
        up = {r: v for v, r in down.items()}
        local = mk_matching(range(1, len(support) + 1), _relabel_edges(comp, down))
        sp = theta_inv(local)
        cycles.append(tuple(up[r] for r in standard_cycles(sp.perm).cycles[0]))
        neg.update(up[r] for r in sp.neg)
    perm = permutation_from_cycles(cycles, m.n)
    return SignedPermutation(perm=perm, neg=frozenset(neg))


# ---------------------------------------------------------------------------
# Notation and JSON.

_SIGNED_TOKEN = re.compile(r"(\d+)\s*([+-]?)")


def format_signed(sp: SignedPermutation) -> str:
    parts = []
    for cyc in standard_cycles(sp.perm).cycles:
        inner = " ".join(f"{v}{'-' if v in sp.neg else '+'}" for v in cyc)
        parts.append(f"({inner})")
    return "".join(parts)


def parse_signed(text: str, n: int | None = None) -> SignedPermutation:
    """Parse signed cycle notation like ``(1+ 6- 3+ 4+)(2+ 8- 7+)(5+)``.

    An omitted sign defaults to +.  With ``n`` given, missing values are
    positive fixed points; a bare form must cover 1..n.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty signed permutation text")
    pos = 0
    cycles: list[list[int]] = []
    neg: set[int] = set()
    seen: set[int] = set()
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
        inner = text[pos + 1 : close].strip()
        if not inner:
            raise ValueError("malformed parentheses: empty cycle")
        cyc: list[int] = []
        scan = 0
        for match in _SIGNED_TOKEN.finditer(inner):
            between = inner[scan : match.start()]
            if between.strip(" ,"):
                raise ValueError(f"unexpected text in cycle: {between!r}")
            v = int(match.group(1))
            if v < 1:
                raise ValueError(f"value out of range: {v}")
            if v in seen:
                raise ValueError(f"duplicate element: {v}")
            seen.add(v)
            cyc.append(v)
            if match.group(2) == "-":
                neg.add(v)
            scan = match.end()
        if inner[scan:].strip(" ,"):
            raise ValueError(f"unexpected text in cycle: {inner[scan:]!r}")
        cycles.append(cyc)
        pos = close + 1
    size = max(seen) if n is None else n
    missing = set(range(1, size + 1)) - seen
    if n is None and missing:
        raise ValueError(f"gap in 1..{size} coverage: missing {sorted(missing)}")
    cycles.extend([v] for v in sorted(missing))
    perm = permutation_from_cycles(cycles, size)
    return SignedPermutation(perm=perm, neg=frozenset(neg))


def signed_to_json_dict(sp: SignedPermutation) -> dict:
    return {
        "n": sp.n,
        "one_line": list(sp.perm.word),
        "neg": sorted(sp.neg),
    }


def signed_from_json_dict(data: dict) -> SignedPermutation:
    try:
        word = tuple(data["one_line"])
        neg = frozenset(data["neg"])
        n = data.get("n", len(word))
    except (TypeError, KeyError) as exc:
        raise ValueError(f"signed permutation JSON needs 'one_line' and 'neg': {exc}") from None
    if n != len(word):
        raise ValueError(f"declared n={n} but one_line has length {len(word)}")
    return SignedPermutation(perm=Permutation(word), neg=neg)

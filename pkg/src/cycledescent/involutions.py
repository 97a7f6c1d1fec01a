"""
Sign-reversing involutions on permutation families.

All maps here preserve the excedance count and flip the parity of the
cycle-descent count (delta of exactly +-1) away from their fixed points,
which is what collapses the signed sums of :mod:`cycledescent.statpolys`
to their closed forms.

Three layers of machinery:

- ``phi_map``: split or merge cycles at the last top-descent of the
  flattened cycle word.  Defined whenever the flattening is not 1 2 .. n.
- ``psi(n, i, .)``: an involution on {pi : pi(i) = 1}.  It applies
  ``phi_map`` when the last top-descent lies outside the cycle containing
  1, and otherwise restructures that first cycle (detach an increasing
  prefix, or splice the last cycle in after the 1).  Its fixed sets have
  size 2^(n-2) for i in {1, n} and are empty for 1 < i < n.
- ``varphi(n, i, .)``: an involution on derangements with pi(i) = 1 whose
  unique fixed point is the cyclic permutation (1, 2, ..., i-1, n, n-1,
  ..., i).  It merges the last cycle into its predecessor, or splits the
  last cycle in two, keyed on whether that cycle is "staircase shaped"
  (an increasing run followed by the decreasing run of all larger
  elements, like the fixed point itself).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perms import (
    Permutation,
    hat,
    permutation_from_cycles,
    red,
    standard_cycles,
    statistics,
)

__all__ = [
    "InvolutionOutcome",
    "last_top_descent",
    "phi_map",
    "psi",
    "psi_fixed_set",
    "m_index",
    "varphi",
    "varphi_fixed_point",
]


@dataclass(frozen=True)
class InvolutionOutcome:
    """Image of one involution application plus branch bookkeeping.

    ``case_tag`` records which branch fired: ``fixed``, ``phi-split``,
    ``phi-merge``, ``psi-case1``, ``psi-case2``, ``varphi-merge`` or
    ``varphi-split``.  ``delta_cdes`` is cdes(image) - cdes(input); it is 0
    exactly on fixed points and +-1 otherwise.
    """

    image: Permutation
    case_tag: str
    delta_cdes: int


def _outcome(p: Permutation, image: Permutation, tag: str) -> InvolutionOutcome:
    return InvolutionOutcome(
        image=image,
        case_tag=tag,
        delta_cdes=statistics(image).cdes - statistics(p).cdes,
    )


def last_top_descent(p: Permutation) -> int | None:
    """The value at the last descent of the flattened cycle word, if any.

    Returns the entry a_j itself (not its position) for the last j with
    a_j > a_{j+1} in ``hat(p)``; None when the flattening is increasing.
    """
    word = hat(p)
    for j in range(len(word) - 2, -1, -1):
        if word[j] > word[j + 1]:
            return word[j]
    return None


def phi_map(p: Permutation) -> InvolutionOutcome:
    """Split or merge cycles at the last top-descent.

    If the top-descent value ends its cycle, the following cycle is merged
    onto it (erasing ")(" in the written decomposition); otherwise the
    cycle is split right after the value.  Both moves preserve the
    flattened word, the top-descent itself, and the excedance count, and
    change cdes by exactly one; applying the map twice is the identity.
    """
    qv = last_top_descent(p)
    if qv is None:
        raise ValueError("map undefined: the flattened cycle word is increasing")
    cycles = list(standard_cycles(p).cycles)
    for k, cyc in enumerate(cycles):
        if qv not in cyc:
            continue
        pos = cyc.index(qv)
        if pos == len(cyc) - 1:
            # the last top-descent is never the global last entry, so a
            # following cycle always exists here
            merged = cyc + cycles[k + 1]
            new_cycles = cycles[:k] + [merged] + cycles[k + 2 :]
            tag = "phi-merge"
        else:
            new_cycles = (
                cycles[:k] + [cyc[: pos + 1], cyc[pos + 1 :]] + cycles[k + 1 :]
            )
            tag = "phi-split"
        image = permutation_from_cycles(new_cycles, p.n)
        return _outcome(p, image, tag)
    raise AssertionError("unreachable: top-descent not found in any cycle")


def _index_set(p: Permutation) -> set[int]:
    """Positions j >= 1 in the cycle (1, c_1, ..., c_l) containing 1 such
    that c_j is not the largest element once the tail c_{j+1}.. is removed
    from consideration."""
    first = standard_cycles(p).cycles[0]
    tail = first[1:]  # c_1 .. c_l
    excluded: set[int] = set()
    out: set[int] = set()
    cur_max = p.n
    for j in range(len(tail), 0, -1):
        while cur_max in excluded:
            cur_max -= 1
        if tail[j - 1] < cur_max:
            out.add(j)
        excluded.add(tail[j - 1])
    return out


def m_index(p: Permutation) -> int | None:
    """min of the index set on the cycle containing 1; None when empty."""
    q = _index_set(p)
    return min(q) if q else None


def psi(n: int, i: int, p: Permutation) -> InvolutionOutcome:
    """Sign-reversing involution on {pi in S_n : pi(i) = 1}."""
    if n < 2:
        raise ValueError("involution defined for n >= 2")
    if p.n != n or not 1 <= i <= n:
        raise ValueError(f"bad arguments: n={n}, i={i}, perm of size {p.n}")
    if p.word[i - 1] != 1:
        raise ValueError(f"{p} does not place the value 1 at position {i}")

    qv = last_top_descent(p)
    if i == 1:
        if qv is None:
            return _outcome(p, p, "fixed")
        return phi_map(p)

    cycles = standard_cycles(p).cycles
    first = cycles[0]
    if qv is not None and qv not in first:
        return phi_map(p)

    index_set = _index_set(p)
    if not index_set:
        # increasing-staircase first cycle ending at n, increasing rest:
        # these are exactly the fixed points, and exist only for i = n
        if i != n:
            raise AssertionError("empty index set for interior i")
        return _outcome(p, p, "fixed")
    m = min(index_set)
    if m >= 2:
        # detach the increasing prefix c_1 .. c_{m-1} as a cycle of its own
        new_first = (1,) + first[m:]
        detached = first[1:m]
        new_cycles = [new_first, detached, *cycles[1:]]
        tag = "psi-case1"
    else:
        # splice the last cycle into the first, right after the 1
        last = cycles[-1]
        new_first = (1,) + last + first[1:]
        new_cycles = [new_first, *cycles[1:-1]]
        tag = "psi-case2"
    image = permutation_from_cycles(new_cycles, n)
    return _outcome(p, image, tag)


def _consecutive_block_cycles(values: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """All ways to cut a sorted run into consecutive blocks, each block an
    increasing cycle.  2^(len-1) results; the empty run yields one."""
    values = list(values)
    if not values:
        yield []
        return
    gaps = len(values) - 1
    for r in range(gaps + 1):
        for cuts in combinations(range(1, len(values)), r):
            bounds = [0, *cuts, len(values)]
            yield [tuple(values[a:b]) for a, b in zip(bounds, bounds[1:])]


def psi_fixed_set(n: int, i: int) -> frozenset[Permutation]:
    """The exact fixed-point set of ``psi(n, i, .)``.

    Size 2^(n-2) for i = 1 (singleton (1) plus consecutive increasing
    blocks of 2..n) and for i = n (staircase first cycle (1, k, .., n)
    plus consecutive blocks of 2..k-1); empty for interior i.
    """
    if n < 2:
        raise ValueError("fixed sets defined for n >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"index out of range: i={i}, n={n}")
    out: set[Permutation] = set()
    if i == 1:
        for blocks in _consecutive_block_cycles(range(2, n + 1)):
            out.add(permutation_from_cycles([(1,), *blocks], n))
    elif i == n:
        for k in range(2, n + 1):
            staircase = (1, *range(k, n + 1))
            for blocks in _consecutive_block_cycles(range(2, k)):
                out.add(permutation_from_cycles([staircase, *blocks], n))
    return frozenset(out)


# ---------------------------------------------------------------------------
# The involution on derangements with pi(i) = 1.


def _staircase_shaped(ranks: tuple[int, ...]) -> bool:
    """True for rank words of the form 1, 2, .., r-1, s, s-1, .., r."""
    s = len(ranks)
    if s < 2:
        return False
    top = ranks.index(s)
    return ranks[:top] == tuple(range(1, top + 1)) and ranks[top:] == tuple(
        range(s, top, -1)
    )


def _rank_word(seq: Sequence[int]) -> tuple[int, ...]:
    return red(tuple(seq)).word


def varphi_fixed_point(n: int, i: int) -> Permutation:
    """The cyclic derangement (1, 2, ..., i-1, n, n-1, ..., i)."""
    if not 2 <= i <= n:
        raise ValueError(f"index out of range: i={i}, n={n}")
    cycle = tuple(range(1, i)) + tuple(range(n, i - 1, -1))
    return permutation_from_cycles([cycle], n)


def varphi(n: int, i: int, p: Permutation) -> InvolutionOutcome:
    """Sign-reversing involution on derangements with pi(i) = 1.

    Branches on the last cycle C of the standard decomposition:

    - C staircase shaped and the only cycle: p is the unique fixed point.
    - C staircase shaped, k >= 2 cycles: merge C into the cycle before it,
      inserted after that cycle's first element; when the predecessor's
      second element is larger than the element preceding C's maximum,
      that element is moved behind C's tail first.
    - otherwise: split C at its longest staircase-shaped proper prefix
      into two cycles (the mirror images of the two merge variants).
    """
    if p.n != n:
        raise ValueError(f"size mismatch: n={n}, perm of size {p.n}")
    if not 2 <= i <= n:
        raise ValueError(f"index out of range: i={i}, n={n}")
    if p.word[i - 1] != 1:
        raise ValueError(f"{p} does not place the value 1 at position {i}")
    stats = statistics(p)
    if stats.fix:
        raise ValueError(f"{p} is not a derangement")

    cycles = standard_cycles(p).cycles
    last = cycles[-1]
    s = len(last)

    if _staircase_shaped(_rank_word(last)):
        if len(cycles) == 1:
            return _outcome(p, p, "fixed")
        prev = cycles[-2]
        top = last.index(max(last))  # 0-based position of the maximum
        if prev[1] < last[top - 1]:
            merged = (prev[0], *last, *prev[1:])
        else:
            merged = (
                prev[0],
                *last[: top - 1],
                *last[top:],
                last[top - 1],
                *prev[1:],
            )
        image = permutation_from_cycles([*cycles[:-2], merged], n)
        return _outcome(p, image, "varphi-merge")

    # longest staircase-shaped proper prefix; prefixes of length 2 and 3
    # always qualify, and the property is hereditary, so scan upward
    cut = 3
    for length in range(4, s):
        if _staircase_shaped(_rank_word(last[:length])):
            cut = length
        else:
            break
    top = last[:cut].index(max(last[:cut]))
    after = last[cut]
    head = (last[0], *last[cut:])
    if after < last[top - 1]:
        rest = last[1:cut]
    else:
        rest = (*last[1:top], last[cut - 1], *last[top : cut - 1])
    image = permutation_from_cycles([*cycles[:-1], head, rest], n)
    return _outcome(p, image, "varphi-split")

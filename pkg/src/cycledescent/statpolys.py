"""
Statistic polynomials over permutation families, by brute force and by
recurrence, plus the classical signed identities they specialize to.

The central object is the generating polynomial of (exc, cdes, fix) over
the permutations with the value 1 at a fixed position i, with t marking
that position:

    statistic_poly(n, i)  =  sum over {pi : pi(i) = 1} of
                             x^exc(pi) * y^cdes(pi) * q^fix(pi) * t^i

Everything here is exact integer arithmetic; brute-force sums are the
oracle and the recurrences are the fast path checked against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .perms import (
    Permutation,
    cycle_string,
    enumerate_permutations,
    statistics,
)
from .poly import ONE, T, X, Y, ZERO, MultiPoly

__all__ = [
    "BRUTE_CAP",
    "PolyTable",
    "IdentityReport",
    "statistic_poly",
    "recurrence_table",
    "alternating_closed_form",
    "cdes_distribution_brute",
    "cdes_distribution_rec",
    "klazar_count",
    "b20_count",
    "IDENTITY_IDS",
    "identity_check",
]

# Hard cap for per-cell brute-force enumeration; 9! is the desk limit.
BRUTE_CAP = 9


@dataclass
class PolyTable:
    """Polynomials indexed by the position i of the value 1, i = 1..n."""

    n: int
    entries: dict[int, MultiPoly]

    def total(self) -> MultiPoly:
        acc = ZERO
        for p in self.entries.values():
            acc = acc + p
        return acc


@dataclass
class IdentityReport:
    identity_id: str
    n: int
    passed: bool
    lhs: MultiPoly
    rhs: MultiPoly
    witness: str | None = None


def _check_brute_args(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"index out of range: i={i}, n={n}")
    if n > BRUTE_CAP:
        raise ValueError(f"brute force capped at n <= {BRUTE_CAP}, got {n}")


@lru_cache(maxsize=None)
def statistic_poly(n: int, i: int, derangements: bool = False) -> MultiPoly:
    """Exact (x, y, q, t) generating polynomial over {pi : pi(i) = 1}.

    With ``derangements=True`` the sum is restricted to fixed-point-free
    permutations (the q exponent is then always 0).  Every term carries
    t-exponent i.
    """
    _check_brute_args(n, i)
    family = "derangements_one_at_i" if derangements else "one_at_i"
    counts: dict[tuple[int, int, int, int], int] = {}
    for p in enumerate_permutations(family, n, i):
        s = statistics(p)
        key = (s.exc, s.cdes, s.fix, i)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts)


def recurrence_table(n: int, derangements: bool = False) -> PolyTable:
    """Table of the (x, y) polynomials at q = 1 (or q = 0) and t = 1, built
    bottom-up from the deletion recurrence

        P[m, i] = x*total(P[m-2]) + x*sum(P[m-1, j], j=2..i-1)
                            + y*sum(P[m-1, j], j=i..m-1)      for i >= 2,

    with P[m, 1] = total(P[m-1]) in the unrestricted case.  The
    fixed-point-free variant keeps the same shape with bases
    total(P[0]) = 1, total(P[1]) = 0 and P[m, 1] = 0 for m >= 2 (the value
    1 cannot sit at position 1 in a derangement); those bases are the
    unique ones reproducing brute force at small sizes.
    """
    if derangements:
        if n < 2:
            raise ValueError("derangement table needs n >= 2")
        totals: list[MultiPoly] = [ONE, ZERO]
        tables: list[dict[int, MultiPoly]] = [{}, {1: ZERO}]
    else:
        if n < 1:
            raise ValueError("table needs n >= 1")
        totals = [ONE, ONE]  # total over the empty and the singleton table
        tables = [{}, {1: ONE}]
    for m in range(2, n + 1):
        prev = tables[m - 1]
        row: dict[int, MultiPoly] = {}
        row[1] = ZERO if derangements else totals[m - 1]
        for i in range(2, m + 1):
            acc = X * totals[m - 2]
            for j in range(2, i):
                acc = acc + X * prev[j]
            for j in range(i, m):
                acc = acc + Y * prev[j]
            row[i] = acc
        tables.append(row)
        total = ZERO
        for p in row.values():
            total = total + p
        totals.append(total)
    return PolyTable(n=n, entries=tables[n])


def alternating_closed_form(n: int, i: int, derangements: bool = False) -> MultiPoly:
    """Closed form of the statistic polynomial at y = -1 (and q = 1 or 0).

    Unrestricted (q = 1):  t*(1+x)^(n-2) for i = 1, zero for 1 < i < n,
    t^n*x*(1+x)^(n-2) for i = n.  Fixed-point-free (q = 0):
    (-1)^(n-i)*x^(i-1)*t^i for 2 <= i <= n.
    """
    if n < 2:
        raise ValueError("closed form needs n >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"index out of range: i={i}, n={n}")
    if derangements:
        if i == 1:
            raise ValueError("fixed-point-free closed form needs i >= 2")
        sign = 1 if (n - i) % 2 == 0 else -1
        return MultiPoly.monomial(sign, ex=i - 1, et=i)
    if i == 1:
        return T * (ONE + X) ** (n - 2)
    if i == n:
        return MultiPoly.monomial(1, ex=1, et=n) * (ONE + X) ** (n - 2)
    return ZERO


def cdes_distribution_brute(n: int, derangements: bool = False) -> MultiPoly:
    """Sum of y^cdes over all permutations (or all derangements) of [n]."""
    if n > BRUTE_CAP:
        raise ValueError(f"brute force capped at n <= {BRUTE_CAP}, got {n}")
    family = "derangements" if derangements else "all"
    counts: dict[tuple[int, int, int, int], int] = {}
    for p in enumerate_permutations(family, n):
        key = (0, statistics(p).cdes, 0, 0)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts)


def cdes_distribution_rec(n: int, derangements: bool = False) -> MultiPoly:
    """The same distribution computed by recurrence, as a polynomial in y.

    Unrestricted:  b[1] = 1 and
        b[m+1] = b[m] + sum(b[i] * C(m, i-1) * (y-1)^(m-i), i=1..m).
    Fixed-point-free:  b[0] = 1, b[1] = 0 and
        b[m+1] = sum(C(m, i) * (b[i+1] + b[i]) * (y-1)^(m-i-1), i=0..m-1).
    """
    ym1 = Y - ONE
    if derangements:
        if n < 0:
            raise ValueError("negative size")
        b: list[MultiPoly] = [ONE, ZERO]
        for m in range(1, n):
            acc = ZERO
            for i in range(0, m):
                term = (b[i + 1] + b[i]) * (ym1 ** (m - i - 1))
                acc = acc + math.comb(m, i) * term
            b.append(acc)
        return b[n]
    if n < 1:
        raise ValueError("size must be >= 1")
    b = [ZERO, ONE]
    for m in range(1, n):
        acc = b[m]
        for i in range(1, m + 1):
            acc = acc + math.comb(m, i - 1) * b[i] * (ym1 ** (m - i))
        b.append(acc)
    return b[n]


def klazar_count(n: int) -> int:
    """Number of sign-enriched cycle-descent permutations of [n], via the
    integer recurrence  c[m+1] = c[m] + sum(c[m+1-i] * C(m, i), i=1..m).

    This is the y = 2 specialization of the unrestricted recurrence and is
    kept as an independent integer-only path for cross-checks.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    c = [0, 1]
    for m in range(1, n):
        c.append(c[m] + sum(c[m + 1 - i] * math.comb(m, i) for i in range(1, m + 1)))
    return c[n]


def b20_count(n: int) -> int:
    """Derangement analogue of :func:`klazar_count` (y = 2, q = 0)."""
    if n < 0:
        raise ValueError("negative size")
    c = [1, 0]
    for m in range(1, n):
        c.append(
            sum(math.comb(m, i) * (c[i + 1] + c[i]) for i in range(0, m))
        )
    return c[n]


# ---------------------------------------------------------------------------
# Signed identities.  Each identity pairs a brute-force weighted enumeration
# (the lhs) with an independently built closed form (the rhs).

Weight = Callable[[Permutation], tuple[int, tuple[int, int, int, int]]]


def _weight_exc_signed_cyc(p: Permutation) -> tuple[int, tuple[int, int, int, int]]:
    s = statistics(p)
    return (-1) ** s.cyc, (s.exc, 0, 0, 0)


def _weight_exc_signed_cyc_tlast(p: Permutation) -> tuple[int, tuple[int, int, int, int]]:
    s = statistics(p)
    return (-1) ** s.cyc, (s.exc, 0, 0, p.word[-1])


def _weight_signed_cdes_t(p: Permutation) -> tuple[int, tuple[int, int, int, int]]:
    s = statistics(p)
    return (-1) ** s.cdes, (0, 0, 0, s.inv1)


def _weight_exc_signed_cdes_t(p: Permutation) -> tuple[int, tuple[int, int, int, int]]:
    s = statistics(p)
    return (-1) ** s.cdes, (s.exc, 0, 0, s.inv1)


def _weight_signed_cdes(p: Permutation) -> tuple[int, tuple[int, int, int, int]]:
    s = statistics(p)
    return (-1) ** s.cdes, (0, 0, 0, 0)


def _geometric_negative(n: int) -> MultiPoly:
    # -x - x^2 - ... - x^(n-1)
    acc = ZERO
    for j in range(1, n):
        acc = acc - MultiPoly.monomial(1, ex=j)
    return acc


def _rhs_refined(n: int) -> MultiPoly:
    # sum over i = 1..n-1 of -x^(n-i) * t^i, t marking the last entry pi(n)
    acc = ZERO
    for i in range(1, n):
        acc = acc - MultiPoly.monomial(1, ex=n - i, et=i)
    return acc


def _rhs_signed_d_t(n: int) -> MultiPoly:
    acc = ZERO
    for i in range(2, n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        acc = acc + MultiPoly.monomial(sign, ex=i - 1, et=i)
    return acc


# id -> (domain family, weight, rhs builder, minimum n)
_IDENTITY_SPECS: dict[str, tuple[str, Weight, Callable[[int], MultiPoly], int]] = {
    "brenti": ("all", _weight_exc_signed_cyc, lambda n: -((X - ONE) ** (n - 1)), 1),
    "kz-total": ("derangements", _weight_exc_signed_cyc, _geometric_negative, 1),
    "kz-refined": ("derangements", _weight_exc_signed_cyc_tlast, _rhs_refined, 1),
    "signed-sni": ("all", _weight_signed_cdes_t, None, 2),  # per-i, handled below
    "signed-sn": (
        "all",
        _weight_signed_cdes_t,
        lambda n: 2 ** (n - 2) * (T + T**n),
        2,
    ),
    "signed-d-t": ("derangements", _weight_exc_signed_cdes_t, _rhs_signed_d_t, 1),
    "signed-d-parity": (
        "derangements",
        _weight_signed_cdes,
        lambda n: MultiPoly.constant((1 - (-1) ** (n - 1)) // 2),
        1,
    ),
}

IDENTITY_IDS = tuple(_IDENTITY_SPECS)


def _weighted_sum(family: str, n: int, weight: Weight, i: int | None = None) -> MultiPoly:
    counts: dict[tuple[int, int, int, int], int] = {}
    for p in enumerate_permutations(family, n, i):
        sign, key = weight(p)
        counts[key] = counts.get(key, 0) + sign
    return MultiPoly(counts)


def _find_witness(family: str, n: int, weight: Weight, diff: MultiPoly) -> str | None:
    lead = diff.sorted_terms()[0][0]
    for p in enumerate_permutations(family, n):
        if weight(p)[1] == lead:
            return f"{p} = {cycle_string(p)} (first contributor to the leading mismatch)"
    return None


def identity_check(identity_id: str, n: int) -> IdentityReport:
    """Check one signed identity at size n by exhaustive enumeration.

    Identity ids:

    - ``brenti``: sum over all pi of x^exc * (-1)^cyc = -(x-1)^(n-1).
    - ``kz-total``: the same sum over derangements = -x - ... - x^(n-1).
    - ``kz-refined``: derangements split by the last entry pi(n) = i give
      -x^(n-i) each; t marks pi(n) in the report.
    - ``signed-sni``: per position of the value 1, sum of (-1)^cdes * t^i is
      2^(n-2)*t, zero, or 2^(n-2)*t^n.
    - ``signed-sn``: summed over all pi this is 2^(n-2)*(t + t^n).
    - ``signed-d-t``: over derangements, sum of x^exc * (-1)^cdes *
      t^{pos of 1} = sum_i (-1)^(n-i) * x^(i-1) * t^i.
    - ``signed-d-parity``: sum over derangements of (-1)^cdes is 1 for even
      n and 0 for odd n.
    """
    if identity_id not in _IDENTITY_SPECS:
        raise ValueError(f"unknown identity id: {identity_id!r}")
    if n > BRUTE_CAP:
        raise ValueError(f"brute force capped at n <= {BRUTE_CAP}, got {n}")
    family, weight, rhs_fn, min_n = _IDENTITY_SPECS[identity_id]
    if n < min_n:
        raise ValueError(f"identity {identity_id!r} needs n >= {min_n}")

    if identity_id == "signed-sni":
        return _check_signed_sni(n)

    lhs = _weighted_sum(family, n, weight)
    rhs = rhs_fn(n)
    passed = lhs == rhs
    witness = None
    if not passed:
        witness = _find_witness(family, n, weight, lhs - rhs)
    return IdentityReport(identity_id, n, passed, lhs, rhs, witness)


def _check_signed_sni(n: int) -> IdentityReport:
    lhs_total = ZERO
    rhs_total = ZERO
    witness = None
    passed = True
    half = 2 ** (n - 2)
    for i in range(1, n + 1):
        lhs_i = _weighted_sum("one_at_i", n, _weight_signed_cdes_t, i)
        if i == 1:
            rhs_i = MultiPoly.constant(half) * T
        elif i == n:
            rhs_i = MultiPoly.monomial(half, et=n)
        else:
            rhs_i = ZERO
        lhs_total = lhs_total + lhs_i
        rhs_total = rhs_total + rhs_i
        if lhs_i != rhs_i and passed:
            passed = False
            found = _find_witness("all", n, _weight_signed_cdes_t, lhs_i - rhs_i)
            witness = f"i={i}: {found}" if found else f"i={i}"
    return IdentityReport("signed-sni", n, passed, lhs_total, rhs_total, witness)

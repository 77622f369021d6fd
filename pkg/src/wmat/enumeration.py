"""Counting and generating packed words.

Counts are exact Python ints throughout.  ``d(n, k)`` is the number of packed
words of length n whose largest letter is k, ``d_n`` the number of packed
words of length n and ``i_n`` the number of irreducible ones.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .words import Word, is_irreducible

_stirling_rows: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, from S(n+1,k) = S(n,k-1) + k S(n,k)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs non-negative arguments")
    if k > n:
        return 0
    while len(_stirling_rows) <= n:
        prev = _stirling_rows[-1]
        m = len(prev)  # prev is row m-1, entries k = 0..m-1
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = prev[j - 1] + (j * prev[j] if j < m else 0)
        _stirling_rows.append(row)
    return _stirling_rows[n][k]


def count_dnk_plus(n: int, k: int) -> int:
    """Packed words of length n and sup k with no letter 0."""
    return stirling2(n, k) * math.factorial(k)


def count_dnk_zero(n: int, k: int) -> int:
    """Packed words of length n and sup k containing the letter 0."""
    return stirling2(n, k + 1) * math.factorial(k + 1)


def count_dnk(n: int, k: int) -> int:
    return stirling2(n + 1, k + 1) * math.factorial(k)


@lru_cache(maxsize=None)
def count_dn(n: int) -> int:
    return sum(count_dnk(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def count_in(n: int) -> int:
    """Irreducible packed words of length n, via I = D / (1 + D)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return count_dn(n) - sum(count_in(m) * count_dn(n - m) for m in range(1, n))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts = []
        run = 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def count_in_compositions(n: int) -> int:
    """Alternating sum over compositions of n of products of d_j."""
    if n == 0:
        return 1
    d = [count_dn(j) for j in range(n + 1)]
    total = 0
    for parts in compositions(n):
        term = 1
        for j in parts:
            term *= d[j]
        total += term if len(parts) % 2 else -term
    return total


def egf_coefficients(N: int) -> list[Fraction]:
    """Taylor coefficients 0..N of e^x / (2 - e^x) by exact series division."""
    if N < 0:
        raise ValueError("N must be >= 0")
    inv_fact = [Fraction(1, math.factorial(j)) for j in range(N + 1)]
    # (2 - e^x) = 1 - sum_{j>=1} x^j/j!, so f_n = 1/n! + sum_{j=1}^n f_{n-j}/j!
    f: list[Fraction] = []
    for n in range(N + 1):
        f.append(inv_fact[n] + sum(f[n - j] * inv_fact[j] for j in range(1, n + 1)))
    return f


# ---------------------------------------------------------------- generation


def _generate(n: int, k: int | None) -> Iterator[Word]:
    # Depth-first over letters in increasing order, so output is lexicographic.
    # A branch is kept only if the letters still missing from 1..target fit in
    # the positions left, hence every branch completes to a packed word.
    if n == 0:
        if k in (None, 0):
            yield ()
        return
    w = [0] * n
    seen = [0] * (n + 2)
    top = n if k is None else k

    def rec(pos: int, hi: int, distinct: int) -> Iterator[Word]:
        left = n - pos - 1
        for x in range(top + 1):
            new_hi = hi if x <= hi else x
            new_distinct = distinct + (1 if x and not seen[x] else 0)
            target = new_hi if k is None else k
            if target - new_distinct > left:
                continue
            w[pos] = x
            if left == 0:
                yield tuple(w)
                continue
            seen[x] += 1
            yield from rec(pos + 1, new_hi, new_distinct)
            seen[x] -= 1

    yield from rec(0, 0, 0)


def generate_packed(n: int) -> Iterator[Word]:
    """All packed words of length n, each once, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _generate(n, None)


def generate_packed_with_sup(n: int, k: int) -> Iterator[Word]:
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        return iter(())
    return _generate(n, k)


def generate_irreducible(n: int) -> Iterator[Word]:
    if n < 1:
        raise ValueError("irreducible words have length >= 1")
    return (w for w in generate_packed(n) if is_irreducible(w))


def generate_packed_upto(n: int) -> Iterator[Word]:
    for m in range(n + 1):
        yield from generate_packed(m)


# ------------------------------------------------------------------- tables


def dnk_table(max_n: int) -> list[list[int]]:
    return [[count_dnk(n, k) for k in range(max_n + 1)] for n in range(max_n + 1)]


def dn_table(max_n: int) -> list[int]:
    return [count_dn(n) for n in range(max_n + 1)]


def in_table(max_n: int) -> list[int]:
    return [count_in(n) for n in range(max_n + 1)]

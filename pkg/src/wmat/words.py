"""Word calculus over the indexed alphabet x_0, x_1, x_2, ...

A word is a tuple of non-negative ints; the letter x_i is stored as ``i`` and
the empty tuple is the unit word.  Letter 0 is special: packing, shifting and
quotients never move it.

Positions in index sets are 1-based, matching the usual ``w[1..n]`` notation.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


class WordError(ValueError):
    """Raised for malformed words, index sets or substitutions."""


def word(letters: Iterable[int]) -> Word:
    w = tuple(int(x) for x in letters)
    if any(x < 0 for x in w):
        raise WordError(f"negative letter in {list(w)}")
    return w


def sort_key(w: Word) -> tuple[int, Word]:
    """Canonical word order: by length, then lexicographically."""
    return (len(w), w)


# ---------------------------------------------------------------- text format

_WORD_RE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")


def parse_word(text: str) -> Word:
    m = _WORD_RE.match(text)
    if m is None:
        raise WordError(f"cannot parse word {text!r}; expected e.g. [1,1,3,0,2]")
    body = m.group(1)
    if body is None:
        return EMPTY
    return tuple(int(tok) for tok in body.split(","))


def format_word(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


# ------------------------------------------------------------------ alphabet


def partial_degree(w: Word, i: int) -> int:
    if i < 0:
        raise WordError(f"letter index must be >= 0, got {i}")
    return w.count(i)


def ialph(w: Word) -> frozenset[int]:
    """Indices of the letters occurring in ``w`` (0 included when present)."""
    return frozenset(w)


def sup(w: Word) -> int:
    return max(w, default=0)


def inf_nonzero(w: Word) -> int | None:
    """Smallest nonzero letter of ``w``, or None if there is none."""
    return min((x for x in w if x), default=None)


# -------------------------------------------------------------- substitution


def substitute(w: Word, phi: Mapping[int, int]) -> Word:
    if phi.get(0, 0) != 0:
        raise WordError("a substitution must fix letter 0")
    try:
        return tuple(phi[x] if x else 0 for x in w)
    except KeyError as exc:
        raise WordError(f"substitution undefined on letter {exc.args[0]}") from None


def packing_map(w: Word) -> dict[int, int]:
    """The renumbering j_m -> m of the sorted nonzero letters, with 0 -> 0."""
    phi = {0: 0}
    for m, j in enumerate(sorted(set(w) - {0}), start=1):
        phi[j] = m
    return phi


def pack(w: Word) -> Word:
    letters = set(w)
    letters.discard(0)
    if not letters or max(letters) == len(letters):
        return tuple(w)
    phi = {j: m for m, j in enumerate(sorted(letters), start=1)}
    phi[0] = 0
    return tuple(phi[x] for x in w)


def is_packed(w: Word) -> bool:
    letters = set(w)
    letters.discard(0)
    return not letters or (min(letters) >= 1 and max(letters) == len(letters))


def as_packed(w: Iterable[int]) -> Word:
    """Validated construction of a packed word."""
    w = word(w)
    if not is_packed(w):
        raise WordError(f"{format_word(w)} is not packed (pack gives {format_word(pack(w))})")
    return w


def shift(w: Word, t: int) -> Word:
    if t == 0:
        return tuple(w)
    return tuple(x + t if x else 0 for x in w)


def star(u: Word, v: Word) -> Word:
    """Shifted concatenation ``u * v``: append ``v`` with its nonzero letters raised by sup(u)."""
    return tuple(u) + shift(v, sup(u))


def subword(w: Word, positions: Iterable[int]) -> Word:
    """Letters of ``w`` at the given 1-based positions, in increasing position order."""
    idx = sorted(set(positions))
    if idx and (idx[0] < 1 or idx[-1] > len(w)):
        raise WordError(f"positions {idx} out of range for a word of length {len(w)}")
    return tuple(w[i - 1] for i in idx)


def quotient(w: Word, letters: Iterable[int]) -> Word:
    """Send every letter listed in ``letters`` to 0."""
    killed = set(letters)
    if not killed:
        return tuple(w)
    return tuple(0 if x in killed else x for x in w)


def quotient_by_word(w: Word, u: Word) -> Word:
    return quotient(w, ialph(u))


# ------------------------------------------------------------- factorization


def admissible_cuts(w: Word) -> list[int]:
    """Positions ``i`` in 1..|w|-1 at which ``w = w[1..i] * v`` with both parts packed.

    A cut is admissible when the suffix is all zeros, or its smallest nonzero
    letter is exactly one above the supremum of the prefix.
    """
    n = len(w)
    if n == 0:
        raise WordError("the empty word has no cuts")
    # suffix_min[i] = smallest nonzero letter of w[i+1..n] (0-based: w[i:])
    suffix_min = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        x, rest = w[i], suffix_min[i + 1]
        if x and (not rest or x < rest):
            suffix_min[i] = x
        else:
            suffix_min[i] = rest
    cuts = []
    prefix_sup = 0
    for i in range(1, n):
        prefix_sup = max(prefix_sup, w[i - 1])
        m = suffix_min[i]
        if m == 0 or m == prefix_sup + 1:
            cuts.append(i)
    return cuts


def is_irreducible(w: Word) -> bool:
    if not w:
        raise WordError("the unit word is neither reducible nor irreducible")
    return not admissible_cuts(w)


def factor_irreducible(w: Word) -> tuple[Word, ...]:
    """Unique factorization ``w = v_1 * ... * v_r`` into irreducible packed words."""
    w = as_packed(w)
    if not w:
        return ()
    factors = []
    start = 0
    base = 0
    for cut in admissible_cuts(w) + [len(w)]:
        piece = w[start:cut]
        factors.append(shift_down(piece, base))
        base = max(base, max(piece))
        start = cut
    return tuple(factors)


def shift_down(w: Word, t: int) -> Word:
    return tuple(x - t if x else 0 for x in w)


def star_all(words: Iterable[Word]) -> Word:
    out: Word = EMPTY
    for v in words:
        out = star(out, v)
    return out

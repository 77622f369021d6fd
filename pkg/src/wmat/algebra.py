"""Hopf algebra structure on the span of packed words over the rationals.

Elements and tensors are immutable sparse combinations ``{basis: coefficient}``
with zero coefficients never stored, so ``==`` is structural equality.
Coefficients are exact: ``int`` when integral, otherwise ``Fraction``.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping

from .words import (
    EMPTY,
    Word,
    WordError,
    as_packed,
    format_word,
    pack,
    parse_word,
    sort_key,
    star,
)

Scalar = int | Fraction


def _norm(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def format_scalar(c: Scalar) -> str:
    return str(Fraction(c))


class _Combination:
    """Shared vector-space machinery for Element and Tensor."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = self._check_key(key)
            acc[key] = acc.get(key, 0) + _norm(c)
        self._terms = {k: _norm(c) for k, c in acc.items() if c != 0}

    @classmethod
    def _wrap(cls, terms: dict):
        # trusted constructor: keys already valid, zeros already dropped
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    def _check_key(self, key):
        raise NotImplementedError

    def _sort_key(self, key):
        raise NotImplementedError

    def _format_key(self, key) -> str:
        raise NotImplementedError

    def _compatible(self, other) -> bool:
        return type(other) is type(self)

    # mapping-like access
    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms, key=self._sort_key))

    def items(self) -> list[tuple]:
        return [(k, self._terms[k]) for k in self]

    def __getitem__(self, key) -> Scalar:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def terms(self) -> dict:
        return dict(self._terms)

    # vector space
    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "_Combination":
        c = _norm(c)
        if c == 0:
            return self._like({})
        return self._like({k: _norm(v * c) for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Rational)):
            return self.scale(c)
        return NotImplemented

    def _like(self, terms: dict):
        return type(self)._wrap(terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not self._compatible(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.items()):
            body = f"{format_scalar(abs(c))}*{self._format_key(k)}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class Element(_Combination):
    """A linear combination of packed words."""

    __slots__ = ()

    def _check_key(self, key):
        return as_packed(key)

    def _sort_key(self, key):
        return sort_key(key)

    def _format_key(self, key) -> str:
        return format_word(key)

    @classmethod
    def basis(cls, w: Iterable[int]) -> "Element":
        return cls({tuple(w): 1})

    @property
    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented


class Tensor(_Combination):
    """A linear combination of ordered tuples of packed words (one tuple per tensor term).

    All keys of one tensor share the same arity; 2 for coproduct values,
    3 for the iterated coproduct.
    """

    __slots__ = ()

    def _check_key(self, key):
        return tuple(as_packed(w) for w in key)

    def _sort_key(self, key):
        return tuple(sort_key(w) for w in key)

    def _format_key(self, key) -> str:
        return "(x)".join(format_word(w) for w in key)

    @property
    def arity(self) -> int | None:
        for k in self._terms:
            return len(k)
        return None

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return tensor_mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented


ZERO = Element()
ONE = Element.basis(EMPTY)


def basis(w: Iterable[int]) -> Element:
    return Element.basis(as_packed(w))


def add(a, b):
    return a + b


def scale(c, a):
    return a.scale(c)


def _accumulate(out: dict, key, c) -> None:
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _finish(out: dict) -> dict:
    return {k: _norm(c) for k, c in out.items()}


# ---------------------------------------------------------------- product


def mul(a: Element, b: Element) -> Element:
    out: dict = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            _accumulate(out, star(u, v), cu * cv)
    return Element._wrap(_finish(out))


def tensor_mul(s: Tensor, t: Tensor) -> Tensor:
    """Componentwise shifted concatenation of two tensors of equal arity."""
    out: dict = {}
    for ks, cs in s._terms.items():
        for kt, ct in t._terms.items():
            if len(ks) != len(kt):
                raise ValueError("tensor arities differ")
            _accumulate(out, tuple(star(a, b) for a, b in zip(ks, kt)), cs * ct)
    return Tensor._wrap(_finish(out))


def tensor_mul2(s: Tensor, t: Tensor) -> Tensor:
    return tensor_mul(s, t)


# -------------------------------------------------------------- coproduct


@lru_cache(maxsize=None)
def _coproduct_terms(w: Word) -> tuple[tuple[tuple[Word, Word], int], ...]:
    n = len(w)
    out: dict = {}
    for mask in range(1 << n):
        left = []
        right = []
        for i, x in enumerate(w):
            if mask >> i & 1:
                left.append(x)
            else:
                right.append(x)
        killed = set(left)
        killed.discard(0)
        if killed:
            right = [0 if x in killed else x for x in right]
        key = (pack(left), pack(right))
        out[key] = out.get(key, 0) + 1
    return tuple(out.items())


def coproduct_word(w: Word) -> Tensor:
    """Selection-quotient coproduct of a single packed word.

    Sums ``pack(w[I]) (x) pack(w[J] / w[I])`` over all splits of the
    positions into a selected part I and its complement J.
    """
    return Tensor._wrap(dict(_coproduct_terms(as_packed(w))))


def coproduct(a: Element | Iterable[int]) -> Tensor:
    if not isinstance(a, Element):
        return coproduct_word(tuple(a))
    out: dict = {}
    for w, c in a._terms.items():
        for key, m in _coproduct_terms(w):
            _accumulate(out, key, c * m)
    return Tensor._wrap(_finish(out))


def _apply_on_leg(t: Tensor, leg: int, delta: Callable[[Word], Tensor]) -> Tensor:
    out: dict = {}
    for key, c in t._terms.items():
        before, w, after = key[:leg], key[leg], key[leg + 1 :]
        for pair, m in delta(w)._terms.items():
            _accumulate(out, before + pair + after, c * m)
    return Tensor._wrap(_finish(out))


def coproduct_left(t: Tensor, delta: Callable[[Word], Tensor] = coproduct_word) -> Tensor:
    """(Delta (x) Id) applied to a 2-tensor."""
    return _apply_on_leg(t, 0, delta)


def coproduct_right(t: Tensor, delta: Callable[[Word], Tensor] = coproduct_word) -> Tensor:
    """(Id (x) Delta) applied to a 2-tensor."""
    return _apply_on_leg(t, 1, delta)


def counit(a: Element) -> Scalar:
    return a[EMPTY]


def delta_plus(a: Element | Iterable[int]) -> Tensor:
    """Reduced coproduct: drop the ``1 (x) w`` and ``w (x) 1`` terms of every basis word."""
    if not isinstance(a, Element):
        a = basis(a)
    out: dict = {}
    for w, c in a._terms.items():
        if not w:
            continue
        for key, m in _coproduct_terms(w):
            if key[0] and key[1]:
                _accumulate(out, key, c * m)
    return Tensor._wrap(_finish(out))


def swap(t: Tensor) -> Tensor:
    return Tensor._wrap({(b, a): c for (a, b), c in t._terms.items()})


def counit_left(t: Tensor) -> Element:
    """(eps (x) Id) under the identification k (x) H = H."""
    return Element._wrap({b: c for (a, b), c in t._terms.items() if not a})


def counit_right(t: Tensor) -> Element:
    """(Id (x) eps) under the identification H (x) k = H."""
    return Element._wrap({a: c for (a, b), c in t._terms.items() if not b})


def mu(t: Tensor) -> Element:
    """Multiplication map on a 2-tensor."""
    out: dict = {}
    for (a, b), c in t._terms.items():
        _accumulate(out, star(a, b), c)
    return Element._wrap(_finish(out))


# ---------------------------------------------------------------- antipode

_antipode_cache: dict[Word, dict] = {}
_antipode_lock = threading.Lock()


def _antipode_terms(w: Word) -> dict:
    cached = _antipode_cache.get(w)
    if cached is not None:
        return cached
    if not w:
        result = {EMPTY: 1}
    else:
        out: dict = {w: -1}
        for (left, right), m in _coproduct_terms(w):
            if not left or not right:
                continue
            for s, cs in _antipode_terms(left).items():
                _accumulate(out, star(s, right), -m * cs)
        result = out
    with _antipode_lock:
        _antipode_cache.setdefault(w, result)
    return result


def antipode_word(w: Word) -> Element:
    return Element._wrap(dict(_antipode_terms(as_packed(w))))


def antipode(a: Element | Iterable[int]) -> Element:
    if not isinstance(a, Element):
        return antipode_word(tuple(a))
    out: dict = {}
    for w, c in a._terms.items():
        for s, cs in _antipode_terms(w).items():
            _accumulate(out, s, c * cs)
    return Element._wrap(_finish(out))


def clear_caches() -> None:
    _coproduct_terms.cache_clear()
    with _antipode_lock:
        _antipode_cache.clear()


def convolve_antipode_check(w: Iterable[int], side: str = "left") -> Element:
    """``mu o (S (x) Id) o Delta`` (side="left") or ``mu o (Id (x) S) o Delta`` (side="right")."""
    w = as_packed(w)
    out: dict = {}
    for (left, right), m in _coproduct_terms(w):
        if side == "left":
            for s, cs in _antipode_terms(left).items():
                _accumulate(out, star(s, right), m * cs)
        elif side == "right":
            for s, cs in _antipode_terms(right).items():
                _accumulate(out, star(left, s), m * cs)
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return Element._wrap(_finish(out))


# ------------------------------------------------------------- text format

_TERM_RE = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)\s*\*\s*(\[[^\]]*\](?:\s*\(x\)\s*\[[^\]]*\])*)\s*"
)


def _parse_terms(text: str) -> list[tuple[tuple[Word, ...], Fraction]]:
    text = text.strip()
    if text == "0":
        return []
    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise WordError(f"cannot parse combination near {text[pos:]!r}")
        if terms and m.group(1) is None:
            raise WordError(f"missing sign before {m.group(0).strip()!r}")
        sign = -1 if m.group(1) == "-" else 1
        legs = tuple(parse_word(p) for p in m.group(3).split("(x)"))
        terms.append((legs, sign * Fraction(m.group(2))))
        pos = m.end()
    return terms


def parse_element(text: str) -> Element:
    terms = _parse_terms(text)
    if any(len(legs) != 1 for legs, _ in terms):
        raise WordError("expected an element, found tensor terms")
    return Element((legs[0], c) for legs, c in terms)


def parse_tensor(text: str) -> Tensor:
    return Tensor(_parse_terms(text))

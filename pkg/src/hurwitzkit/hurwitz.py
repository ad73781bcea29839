"""Braid moves on Nielsen tuples.

The move ``s_i`` sends ``(..., a, b, ...)`` at positions ``i, i+1`` to
``(..., a b a^-1, a, ...)``; its inverse sends ``(..., a, b, ...)`` to
``(..., b, b^-1 a b, ...)``.  Words are applied left to right, so the word
``s1 s2`` performs ``s1`` first.

The pure generator ``A_ij`` (``1 <= i < j <= n-1``) expands to
``s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .datum import Datum
from .errors import ParseError


@dataclass(frozen=True)
class BraidWord:
    """A word in ``s_1, ..., s_{n-1}`` stored as signed 1-based indices."""

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid word needs at least 2 strands")
        for s in self.letters:
            if s == 0 or abs(s) >= self.strands:
                raise ValueError(f"generator index {abs(s)} out of range 1..{self.strands - 1}")

    @classmethod
    def sigma(cls, i: int, strands: int, sign: int = 1) -> "BraidWord":
        return cls((i if sign > 0 else -i,), strands)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-s for s in reversed(self.letters)), self.strands)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        return BraidWord(self.letters + other.letters, self.strands)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(base.letters * abs(k), self.strands)

    def __len__(self):
        return len(self.letters)

    def reduced(self) -> "BraidWord":
        """Free reduction: cancel adjacent ``s_i s_i^-1`` pairs."""
        out: list[int] = []
        for s in self.letters:
            if out and out[-1] == -s:
                out.pop()
            else:
                out.append(s)
        return BraidWord(tuple(out), self.strands)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{s}" if s > 0 else f"s{-s}^-1" for s in self.letters)


def pure_expansion(i: int, j: int, strands: int) -> BraidWord:
    """``s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``."""
    if not 1 <= i < j <= strands - 1:
        raise ValueError(f"A{i}{j} needs 1 <= i < j <= {strands - 1}")
    prefix = tuple(range(j - 1, i, -1))
    return BraidWord(prefix + (i, i) + tuple(-s for s in reversed(prefix)), strands)


@dataclass(frozen=True)
class PureGen:
    i: int
    j: int
    strands: int

    @cached_property
    def word(self) -> BraidWord:
        return pure_expansion(self.i, self.j, self.strands)

    @property
    def name(self) -> str:
        return f"A{self.i}{self.j}" if self.strands <= 10 else f"A{self.i},{self.j}"


def pure_generators(n: int) -> list[PureGen]:
    """``A_ij`` for ``1 <= i < j <= n-1``, in lexicographic order of ``(i, j)``."""
    if n < 3:
        raise ValueError("pure generators need n >= 3")
    return [PureGen(i, j, n) for i in range(1, n) for j in range(i + 1, n)]


_TOKEN_RE = re.compile(r"^(?:s(\d+)|a(\d+)(?:,(\d+))?)(?:\^(-?\d+))?$")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse tokens such as ``s1 s2^-1 A12 A13^2`` (case-insensitive).

    ``A`` tokens use two single digits (``A12``) or ``A1,12`` for larger indices.
    """
    letters: list[int] = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok.lower())
        if not m:
            raise ParseError(f"bad braid token {tok!r}")
        sig, pair, second, exp = m.groups()
        power = int(exp) if exp is not None else 1
        try:
            if sig is not None:
                base = BraidWord.sigma(int(sig), strands)
            else:
                if second is not None:
                    i, j = int(pair), int(second)
                elif len(pair) == 2:
                    i, j = int(pair[0]), int(pair[1])
                else:
                    raise ParseError(f"ambiguous pure generator {tok!r}; write A<i>,<j>")
                base = pure_expansion(i, j, strands)
        except ValueError as exc:
            raise ParseError(f"{tok}: {exc}") from None
        letters.extend((base ** power).letters)
    return BraidWord(tuple(letters), strands)


def apply_sigma(d: Datum, i: int, sign: int = 1) -> Datum:
    """One Hurwitz move ``s_i^sign`` on ``d``."""
    if not 1 <= i <= d.n - 1:
        raise ValueError(f"index {i} out of range 1..{d.n - 1}")
    tab = kernels.tables_for(d.group)
    return d.with_ids(kernels.impl.apply_letters(tab, d.ids, (i if sign > 0 else -i,)))


def apply_word(d: Datum, w: BraidWord) -> Datum:
    if w.strands != d.n:
        raise ValueError(f"word on {w.strands} strands applied to a datum of length {d.n}")
    if not w.letters:
        return d
    tab = kernels.tables_for(d.group)
    return d.with_ids(kernels.impl.apply_letters(tab, d.ids, w.letters))


def sphere_relation_word(n: int) -> BraidWord:
    """``s_1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_1``."""
    up = tuple(range(1, n - 1))
    return BraidWord(up + (n - 1, n - 1) + tuple(reversed(up)), n)


def full_twist_word(n: int, order: str = "lex") -> BraidWord:
    """Product of all ``A_ij`` as a word.

    ``order="lex"`` multiplies in lexicographic order of ``(i, j)``;
    ``order="column"`` groups by ``j`` (``A12 A13 A23 A14 A24 A34 ...``).
    """
    gens = pure_generators(n)
    if order == "column":
        gens = sorted(gens, key=lambda a: (a.j, a.i))
    elif order != "lex":
        raise ValueError(f"unknown order {order!r}")
    letters: tuple[int, ...] = ()
    for a in gens:
        letters += a.word.letters
    return BraidWord(letters, n)

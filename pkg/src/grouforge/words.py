"""Free-group words and the expression trees they are built from.

A word is a freely reduced sequence of (generator index, exponent) syllables.
Words are the common currency for relators and action specifications; the
parser produces expression trees (WordExpr) which `expand` into words.

Conventions (fixed project-wide):
    conjugation  x^y = y^-1 * x * y
    commutator   (x, y) = x^-1 * y^-1 * x * y
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _reduce(syllables: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Freely reduce a syllable sequence (merge adjacent, drop zero exponents)."""
    out: list[tuple[int, int]] = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            merged = out[-1][1] + e
            out.pop()
            if merged:
                out.append((g, merged))
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """An immutable freely reduced word in free-group generators."""

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "syllables", _reduce(syllables))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Word is immutable")

    @staticmethod
    def gen(index: int, exp: int = 1) -> "Word":
        return Word([(index, exp)])

    @staticmethod
    def identity() -> "Word":
        return Word()

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inv(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inv()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def conj(self, by: "Word") -> "Word":
        """self^by = by^-1 * self * by."""
        return by.inv() * self * by

    def is_identity(self) -> bool:
        return not self.syllables

    def letters(self) -> list[int]:
        """Expand into single-generator letters; negative = inverse generator.

        Generator i in positive direction is encoded as i, inverse as ~i
        (i.e. -i - 1), which is convenient for table indexing.
        """
        out = []
        for g, e in self.syllables:
            letter = g if e > 0 else ~g
            out.extend([letter] * abs(e))
        return out

    def max_generator(self) -> int:
        return max((g for g, _ in self.syllables), default=-1)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __repr__(self) -> str:
        return f"Word({list(self.syllables)!r})"


# ---------------------------------------------------------------------------
# Expression trees


@dataclass(frozen=True)
class WordExpr:
    """Base class for parse-tree nodes; expand() yields a reduced Word."""

    def expand(self) -> Word:  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class Gen(WordExpr):
    index: int

    def expand(self) -> Word:
        return Word.gen(self.index)


@dataclass(frozen=True)
class Product(WordExpr):
    factors: tuple[WordExpr, ...]

    def expand(self) -> Word:
        w = Word()
        for f in self.factors:
            w = w * f.expand()
        return w


@dataclass(frozen=True)
class Power(WordExpr):
    base: WordExpr
    exponent: int

    def expand(self) -> Word:
        return self.base.expand() ** self.exponent


@dataclass(frozen=True)
class Conjugation(WordExpr):
    base: WordExpr
    by: WordExpr

    def expand(self) -> Word:
        return self.base.expand().conj(self.by.expand())


@dataclass(frozen=True)
class Commutator(WordExpr):
    left: WordExpr
    right: WordExpr

    def expand(self) -> Word:
        x = self.left.expand()
        y = self.right.expand()
        return x.inv() * y.inv() * x * y


@dataclass(frozen=True)
class Inverse(WordExpr):
    base: WordExpr

    def expand(self) -> Word:
        return self.base.expand().inv()

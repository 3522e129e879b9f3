"""Alphabets, words and free reduction shared by every group in the package.

A word is a finite sequence of signed generator letters.  The two-generator
alphabet used by all experiments has the compact text encoding
``a`` = generator 0, ``A`` = its inverse, ``b`` = generator 1, ``B`` = its
inverse; one character per letter, no separators.  Letters with larger
generator indices are allowed internally (Thompson's group F has an infinite
generating family) but have no text encoding.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Letter(NamedTuple):
    """A signed generator: ``index`` >= 0, ``sign`` in {+1, -1}."""

    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


_CHAR_TO_LETTER = {
    "a": Letter(0, 1),
    "A": Letter(0, -1),
    "b": Letter(1, 1),
    "B": Letter(1, -1),
}
_LETTER_TO_CHAR = {v: k for k, v in _CHAR_TO_LETTER.items()}


class Word:
    """An immutable sequence of letters; may be non-freely-reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters = tuple(
            l if isinstance(l, Letter) else Letter(l[0], l[1]) for l in letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __repr__(self) -> str:
        try:
            return f"Word({self.to_text()!r})"
        except ValueError:
            return f"Word({list(self.letters)!r})"

    def formal_inverse(self) -> "Word":
        """Reverse the word and invert every letter (no reduction)."""
        return Word(l.inverse() for l in reversed(self.letters))

    def to_text(self) -> str:
        """Compact text form; only defined for the rank-2 alphabet."""
        try:
            return "".join(_LETTER_TO_CHAR[l] for l in self.letters)
        except KeyError:
            raise ValueError("word uses generator indices outside {0, 1}") from None

    @staticmethod
    def from_text(text: str) -> "Word":
        return parse_word(text)


def parse_word(text: str) -> Word:
    """Parse the ``a/A/b/B`` encoding, reporting the position of any bad character."""
    letters = []
    for pos, ch in enumerate(text):
        letter = _CHAR_TO_LETTER.get(ch)
        if letter is None:
            raise ValueError(f"invalid letter {ch!r} at position {pos}: expected one of a, A, b, B")
        letters.append(letter)
    return Word(letters)


def abelianize(word: Word) -> tuple[int, int]:
    """Exponent sums (k, l) of generators 0 and 1; the image in Z^2.

    Only defined for the rank-2 alphabet.
    """
    k = 0
    l = 0
    for index, sign in word:
        if index == 0:
            k += sign
        elif index == 1:
            l += sign
        else:
            raise ValueError(f"abelianization is defined for generator indices 0 and 1 only, got {index}")
    return k, l


def is_balanced(word: Word) -> bool:
    """True iff the word has zero exponent sum in both generators."""
    return abelianize(word) == (0, 0)


def free_reduce(word: Word) -> Word:
    """Freely reduce by cancelling adjacent inverse pairs; the result is unique."""
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return Word(stack)

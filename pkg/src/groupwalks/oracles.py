"""Uniform identity-test and canonical-key oracles for the three test groups.

Every oracle speaks the same rank-2 alphabet (generator indices 0 and 1) and
exposes two layers:

* word level: ``is_identity(word)`` and ``word_key(word)`` for samplers;
* element level: ``initial()`` / ``step(state, index, sign)`` / hashable
  states, for distribution dynamic programming and breadth-first search.

States are canonical, so two words represent the same group element exactly
when their states (or word keys) coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import thompson
from .words import Letter, Word, free_reduce

__all__ = [
    "WreathState",
    "zwrz_evaluate",
    "f_oracle",
    "f2_oracle",
    "zwrz_oracle",
    "get_oracle",
    "LETTERS",
]

# the four signed generators of the common alphabet, in a fixed order
LETTERS = ((0, 1), (0, -1), (1, 1), (1, -1))


class FOracle:
    """Thompson's group F via normal forms; the only oracle with an exact metric."""

    name = "f"
    num_generators = 2
    has_exact_length = True

    def is_identity(self, word) -> bool:
        return thompson.is_identity_f(word)

    def word_key(self, word) -> bytes:
        acc = thompson.Accumulator()
        for index, sign in word:
            acc.append(index, sign)
        return acc.key()

    def exact_length(self, word) -> int:
        acc = thompson.Accumulator()
        for index, sign in word:
            acc.append(index, sign)
        return acc.fordham_length()

    def initial(self):
        return ((), ())

    def step(self, state, index: int, sign: int):
        acc = thompson.Accumulator.from_pairs(*state)
        acc.append(index, sign)
        return acc.pairs()


class F2Oracle:
    """The free group on two generators; identity test by free reduction."""

    name = "f2"
    num_generators = 2
    has_exact_length = False

    def is_identity(self, word) -> bool:
        return len(free_reduce(word if isinstance(word, Word) else Word(word))) == 0

    def word_key(self, word) -> bytes:
        state = self.initial()
        for index, sign in word:
            state = self.step(state, index, sign)
        return bytes(b & 0xFF for pair in state for b in pair)

    def initial(self):
        return ()

    def step(self, state, index: int, sign: int):
        if state and state[-1] == (index, -sign):
            return state[:-1]
        return state + ((index, sign),)


@dataclass
class WreathState:
    """Normal evaluation of a word in the wreath product Z wr Z.

    ``lamp_polynomial`` maps lamp position -> integer value (zero values are
    never stored); ``head_offset`` is the translation component.  The state
    is the identity exactly when both are trivial.
    """

    lamp_polynomial: dict[int, int] = field(default_factory=dict)
    head_offset: int = 0

    def is_identity(self) -> bool:
        return not self.lamp_polynomial and self.head_offset == 0

    def key(self) -> tuple:
        return (self.head_offset, tuple(sorted(self.lamp_polynomial.items())))


def zwrz_evaluate(word) -> WreathState:
    """Left-to-right evaluation: generator 0 bumps the lamp under the head,
    generator 1 moves the head."""
    lamps: dict[int, int] = {}
    offset = 0
    for index, sign in word:
        if index == 0:
            value = lamps.get(offset, 0) + sign
            if value:
                lamps[offset] = value
            else:
                del lamps[offset]
        elif index == 1:
            offset += sign
        else:
            raise ValueError(f"wreath-product words use generator indices 0 and 1 only, got {index}")
    return WreathState(lamps, offset)


class ZwrZOracle:
    """Z wr Z with generator 0 the lamp and generator 1 the translation."""

    name = "zwrz"
    num_generators = 2
    has_exact_length = False

    def is_identity(self, word) -> bool:
        return zwrz_evaluate(word).is_identity()

    def word_key(self, word):
        return zwrz_evaluate(word).key()

    def initial(self):
        return (0, ())

    def step(self, state, index: int, sign: int):
        offset, lamps = state
        if index == 1:
            return (offset + sign, lamps)
        items = dict(lamps)
        value = items.get(offset, 0) + sign
        if value:
            items[offset] = value
        else:
            del items[offset]
        return (offset, tuple(sorted(items.items())))


_ORACLES = {"f": FOracle(), "f2": F2Oracle(), "zwrz": ZwrZOracle()}


def f_oracle() -> FOracle:
    return _ORACLES["f"]


def f2_oracle() -> F2Oracle:
    return _ORACLES["f2"]


def zwrz_oracle() -> ZwrZOracle:
    return _ORACLES["zwrz"]


def get_oracle(name: str):
    try:
        return _ORACLES[name]
    except KeyError:
        raise ValueError(f"unknown group {name!r}: expected one of f, zwrz, f2") from None

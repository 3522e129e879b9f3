"""Exact counting and uniform sampling of balanced and constrained words.

All discrete draws use exact integer arithmetic against a counter-based
random bit stream (Philox), so sampled distributions are exactly uniform and
runs are bitwise reproducible from ``(root_seed, stream_id)`` regardless of
how work is distributed over processes.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from .words import Letter, Word

__all__ = [
    "RngStream",
    "count_balanced",
    "count_constrained",
    "sample_uniform_word",
    "sample_balanced",
    "sample_constrained",
]

_MASK64 = (1 << 64) - 1

# letter codes 0..3 = a, A, b, B
_CODE_LETTERS = (Letter(0, 1), Letter(0, -1), Letter(1, 1), Letter(1, -1))


class RngStream:
    """Deterministic splittable bit stream: (root_seed, stream_id) -> output.

    Only the raw Philox counter output is consumed, via an internal bit
    buffer, which keeps the sequence stable across library versions and makes
    small draws (a few bits) cheap enough for inner loops.
    """

    _BLOCK = 256  # uint64 words per refill

    __slots__ = ("root_seed", "stream_id", "_philox", "_queue", "_qpos", "_word", "_have")

    def __init__(self, root_seed: int, stream_id: int):
        self.root_seed = root_seed
        self.stream_id = stream_id
        key = np.array([root_seed & _MASK64, stream_id & _MASK64], dtype=np.uint64)
        self._philox = np.random.Philox(key=key)
        self._queue: list[int] = []
        self._qpos = 0
        self._word = 0
        self._have = 0

    def _next_word(self) -> int:
        if self._qpos >= len(self._queue):
            self._queue = self._philox.random_raw(self._BLOCK).tolist()
            self._qpos = 0
        w = self._queue[self._qpos]
        self._qpos += 1
        return w

    def bits(self, k: int) -> int:
        """The next k random bits as an unsigned integer."""
        if k <= 64:
            if self._have < k:
                # drop the remnant of the current word, start a fresh one
                self._word = self._next_word()
                self._have = 64
            val = self._word & ((1 << k) - 1)
            self._word >>= k
            self._have -= k
            return val
        val = 0
        shift = 0
        for _ in range((k + 63) // 64):
            val |= self._next_word() << shift
            shift += 64
        self._word = 0
        self._have = 0
        return val & ((1 << k) - 1)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n); exact for arbitrary-precision n."""
        if n <= 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            val = self.bits(k)
            if val < n:
                return val


@lru_cache(maxsize=None)
def count_balanced(length: int) -> int:
    """Number of length-L words over {a,A,b,B} with zero exponent sum in both
    generators; 0 for odd L."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length % 2:
        return 0
    total = 0
    for j in range(length // 2 + 1):
        rest = length - 2 * j
        total += comb(length, 2 * j) * comb(2 * j, j) * comb(rest, rest // 2)
    return total


@lru_cache(maxsize=None)
def count_constrained(length: int, k: int, l: int) -> int:
    """Number of length-M words whose exponent sums are exactly (k, l)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    total = 0
    for m in _zero_generator_counts(length, k, l):
        total += (
            comb(length, m)
            * comb(m, (m + k) // 2)
            * comb(length - m, (length - m + l) // 2)
        )
    return total


def _zero_generator_counts(length: int, k: int, l: int):
    """Feasible counts m of generator-0 letters for abelian image (k, l)."""
    for m in range(abs(k), length - abs(l) + 1):
        if (m + k) % 2 == 0 and (length - m + l) % 2 == 0:
            yield m


@lru_cache(maxsize=None)
def _balanced_terms(length: int) -> tuple[tuple[int, int], ...]:
    terms = []
    for j in range(length // 2 + 1):
        rest = length - 2 * j
        w = comb(length, 2 * j) * comb(2 * j, j) * comb(rest, rest // 2)
        if w:
            terms.append((2 * j, w))
    return tuple(terms)


@lru_cache(maxsize=None)
def _constrained_terms(length: int, k: int, l: int) -> tuple[tuple[int, int], ...]:
    terms = []
    for m in _zero_generator_counts(length, k, l):
        w = (
            comb(length, m)
            * comb(m, (m + k) // 2)
            * comb(length - m, (length - m + l) // 2)
        )
        if w:
            terms.append((m, w))
    return tuple(terms)


def sample_uniform_word(length: int, rng: RngStream) -> Word:
    """Uniform over all 4^L words: an unconstrained random walk's letters."""
    return Word(_CODE_LETTERS[rng.bits(2)] for _ in range(length))


def _choose_positions(pool: list[int], k: int, rng: RngStream) -> list[int]:
    # partial Fisher-Yates: uniform k-subset of the pool, consumed in place
    n = len(pool)
    for t in range(k):
        u = t + rng.randbelow(n - t)
        pool[t], pool[u] = pool[u], pool[t]
    return pool[:k]


def _build_word(
    length: int, zero_positions: list[int], k: int, l: int, rng: RngStream
) -> Word:
    """Assemble a word with the given generator-0 slots and exponent sums."""
    m = len(zero_positions)
    letters: list[Letter | None] = [None] * length
    plus = (m + k) // 2
    for pos in _choose_positions(zero_positions[:], plus, rng):
        letters[pos] = _CODE_LETTERS[0]
    for pos in zero_positions:
        if letters[pos] is None:
            letters[pos] = _CODE_LETTERS[1]
    one_positions = [p for p in range(length) if letters[p] is None]
    plus = (len(one_positions) + l) // 2
    for pos in _choose_positions(one_positions[:], plus, rng):
        letters[pos] = _CODE_LETTERS[2]
    for pos in one_positions:
        if letters[pos] is None:
            letters[pos] = _CODE_LETTERS[3]
    return Word(letters)


def sample_balanced(length: int, rng: RngStream) -> Word:
    """Uniform over the count_balanced(L) balanced words of length L."""
    if length % 2:
        raise ValueError("balanced words have even length")
    if length == 0:
        return Word()
    terms = _balanced_terms(length)
    r = rng.randbelow(count_balanced(length))
    for m, w in terms:
        if r < w:
            break
        r -= w
    zero_positions = _choose_positions(list(range(length)), m, rng)
    return _build_word(length, zero_positions, 0, 0, rng)


def sample_constrained(length: int, k: int, l: int, rng: RngStream) -> Word:
    """Uniform over length-M words with abelian image exactly (k, l)."""
    total = count_constrained(length, k, l)
    if total == 0:
        raise ValueError(f"no words of length {length} with exponent sums ({k}, {l})")
    terms = _constrained_terms(length, k, l)
    r = rng.randbelow(total)
    for m, w in terms:
        if r < w:
            break
        r -= w
    zero_positions = _choose_positions(list(range(length)), m, rng)
    return _build_word(length, zero_positions, k, l, rng)

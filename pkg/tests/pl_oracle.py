"""Independent reference model: elements of F as exact piecewise-linear maps.

An element is the list of its breakpoints ((x, f(x)) pairs with exact
Fractions).  Generators:

    x_0: [0,1/2] -> [0,1/4], [1/2,3/4] -> [1/4,1/2], [3/4,1] -> [1/2,1]
    x_1: identity on [0,1/2], a half-scale copy of x_0 on [1/2,1]
    x_{n+1} = x_0^{-1} x_n x_0   (products compose right letter first)

This model never touches normal forms or trees, so it can arbitrate any
disagreement in the combinatorial code.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Map = tuple[tuple[Fraction, Fraction], ...]

IDENTITY_MAP: Map = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)))


def _make_map(points) -> Map:
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    # drop breakpoints where the slope does not change
    cleaned = [pts[0]]
    for i in range(1, len(pts) - 1):
        (xa, ya), (xb, yb), (xc, yc) = pts[i - 1], pts[i], pts[i + 1]
        if (yb - ya) * (xc - xb) != (yc - yb) * (xb - xa):
            cleaned.append(pts[i])
    cleaned.append(pts[-1])
    return tuple(cleaned)


X0: Map = _make_map([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])
X1: Map = _make_map(
    [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 4), Fraction(5, 8)), (Fraction(7, 8), Fraction(3, 4)), (1, 1)]
)


def evaluate(f: Map, x: Fraction) -> Fraction:
    pts = f
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            if x == x0:
                return y0
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise ValueError(f"{x} outside [0,1]")


def invert(f: Map) -> Map:
    return tuple((y, x) for x, y in f)


def compose(f: Map, g: Map) -> Map:
    """x -> f(g(x))."""
    xs = {x for x, _ in g}
    g_inv = invert(g)
    xs.update(evaluate(g_inv, x) for x, _ in f)
    pts = [(x, evaluate(f, evaluate(g, x))) for x in sorted(xs)]
    return _make_map(pts)


@lru_cache(maxsize=None)
def generator_map(index: int) -> Map:
    if index == 0:
        return X0
    if index == 1:
        return X1
    prev = generator_map(index - 1)
    # x_{n+1} = x_0^{-1} x_n x_0 for n >= 1; right letter acts first
    return compose(invert(X0), compose(prev, X0))


def word_to_map(word) -> Map:
    """Letters apply right-to-left: the word u v acts as u after v."""
    result = IDENTITY_MAP
    for index, sign in word:
        gen = generator_map(index)
        if sign < 0:
            gen = invert(gen)
        result = compose(result, gen)
    return result


def is_identity_map(f: Map) -> bool:
    return all(x == y for x, y in f)

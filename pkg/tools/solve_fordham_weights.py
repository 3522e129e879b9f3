"""Recover the 7x7 caret-pair weight table from exact BFS distances.

Breadth-first search over the Cayley graph of F with generators {x_0, x_1}
gives the exact word length of every element in the radius-12 ball.  Each
element imposes one linear equation on the unknown pair weights:

    sum over carets k of  w(type of caret k in domain tree,
                            type of caret k in range tree)  =  |element|

We classify carets with a finer split than the final seven types, solve the
(massively overdetermined) system by least squares, round to integers,
verify the fit is exact on the whole ball, then merge fine types whose rows
coincide.  The merged classes and matrix are what ships in
src/groupwalks/fordham_weights.txt.

Run from the repository root:  python tools/solve_fordham_weights.py [radius]
"""

from __future__ import annotations

import sys
import time
from collections import defaultdict

import numpy as np

sys.path.insert(0, "src")

from groupwalks.thompson import Accumulator, _build_tree_pair_arrays, _infix_carets

LETTERS = ((0, 1), (0, -1), (1, 1), (1, -1))

FINE_NAMES = [
    "L0",        # 0 first left caret
    "LL_leaf",   # 1 other left caret, right child a leaf
    "LL_caret",  # 2 other left caret, right child a caret
    "I_00",      # 3 interior, both children leaves
    "I_L0",      # 4 interior, left caret only
    "I_0R",      # 5 interior, right caret only
    "I_LR",      # 6 interior, both carets
    "R0",        # 7 right caret, left child a leaf
    "R0b",       # 8 ... and bottom of the right spine
    "Rvine",     # 9 right caret, left subtree a pure left vine
    "Rvineb",    # 10 ... and bottom
    "Rspine",    # 11 left subtree on its own two spines, not a vine
    "Rspineb",   # 12 ... and bottom
    "Rdeep",     # 13 left subtree with off-spine carets
    "Rdeepb",    # 14 ... and bottom
]
NFINE = len(FINE_NAMES)


def fine_classify(left: list[int], right: list[int], root: int) -> list[int]:
    n = len(left)
    types = [0] * n
    for v in range(n):
        l = left[v] != -1
        r = right[v] != -1
        if not l and not r:
            types[v] = 3
        elif l and not r:
            types[v] = 4
        elif not l and r:
            types[v] = 5
        else:
            types[v] = 6
    v = root
    first = root
    while v != -1:
        types[v] = 2 if right[v] != -1 else 1
        first = v
        v = left[v]
    types[first] = 0
    v = right[root]
    while v != -1:
        bottom = right[v] == -1
        s = left[v]
        if s == -1:
            t = 7
        else:
            if _is_left_vine(left, right, s):
                t = 9
            elif _all_on_spines(left, right, s):
                t = 11
            else:
                t = 13
        types[v] = t + (1 if bottom else 0)
        v = right[v]
    return [types[v] for v in _infix_carets(left, right, root)]


def _is_left_vine(left, right, s) -> bool:
    v = s
    while v != -1:
        if right[v] != -1:
            return False
        v = left[v]
    return True


def _all_on_spines(left, right, s) -> bool:
    spine = set()
    v = s
    while v != -1:
        spine.add(v)
        v = left[v]
    v = right[s]
    while v != -1:
        spine.add(v)
        v = right[v]
    stack = [s]
    while stack:
        v = stack.pop()
        if v == -1:
            continue
        if v not in spine:
            return False
        stack.append(left[v])
        stack.append(right[v])
    return True


def bfs(max_radius: int):
    t0 = time.time()
    visited = {((), ()): 0}
    frontier = [((), ())]
    for r in range(1, max_radius + 1):
        nxt = []
        for pos, neg in frontier:
            for index, sign in LETTERS:
                acc = Accumulator.from_pairs(pos, neg)
                acc.append(index, sign)
                state = acc.pairs()
                if state not in visited:
                    visited[state] = r
                    nxt.append(state)
        frontier = nxt
        print(f"  sphere {r}: {len(frontier)} elements  [{time.time()-t0:.0f}s]")
    return visited


def pair_index(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    return a * NFINE + b


def element_vector(pos, neg):
    (dl, dr, droot), (rl, rr, rroot) = _build_tree_pair_arrays(
        [i for i, _ in pos], [e for _, e in pos],
        [j for j, _ in neg], [e for _, e in neg],
    )
    dt = fine_classify(dl, dr, droot)
    rt = fine_classify(rl, rr, rroot)
    vec: dict[int, int] = defaultdict(int)
    for a, b in zip(dt, rt):
        vec[pair_index(a, b)] += 1
    return vec


def main(radius: int = 12) -> None:
    print(f"BFS to radius {radius} ...")
    dist = bfs(radius)
    print(f"ball size {len(dist)}")

    npair = NFINE * NFINE
    ata = np.zeros((npair, npair))
    atd = np.zeros(npair)
    t0 = time.time()
    done = 0
    for (pos, neg), d in dist.items():
        if d == 0:
            continue
        vec = element_vector(pos, neg)
        items = list(vec.items())
        for i, ci in items:
            atd[i] += ci * d
            for j, cj in items:
                ata[i, j] += ci * cj
        done += 1
        if done % 100000 == 0:
            print(f"  accumulated {done} equations [{time.time()-t0:.0f}s]")

    used = np.where(np.diag(ata) > 0)[0]
    print(f"{len(used)} caret-pair classes occur")
    sol, *_ = np.linalg.lstsq(ata[np.ix_(used, used)], atd[used], rcond=None)
    weights = {}
    for idx, w in zip(used, sol):
        weights[idx] = round(float(w))
    print("rounded weights (fine classes):")
    for idx in used:
        a, b = divmod(idx, NFINE)
        print(f"  {FINE_NAMES[a]:9s} {FINE_NAMES[b]:9s} {sol[list(used).index(idx)]:8.4f} -> {weights[idx]}")

    print("verifying exact fit on the whole ball ...")
    bad = 0
    for (pos, neg), d in dist.items():
        if d == 0:
            continue
        vec = element_vector(pos, neg)
        total = sum(weights[i] * c for i, c in vec.items())
        if total != d:
            bad += 1
            if bad <= 10:
                print(f"  MISMATCH dist={d} got={total} pos={pos} neg={neg}")
    print(f"mismatches: {bad} / {len(dist)-1}")
    if bad:
        sys.exit(1)

    # merge fine classes with identical weight rows (on observed pairs)
    rows = {}
    for a in range(NFINE):
        row = tuple(weights.get(pair_index(a, b)) for b in range(NFINE))
        if any(x is not None for x in row):
            rows[a] = row
    groups: dict[tuple, list[int]] = defaultdict(list)
    for a, row in rows.items():
        groups[row].append(a)
    print(f"{len(groups)} distinct weight rows:")
    for row, members in groups.items():
        print("  group:", [FINE_NAMES[a] for a in members])
    np.save("/tmp/fordham_ata.npy", ata)
    np.save("/tmp/fordham_atd.npy", atd)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)

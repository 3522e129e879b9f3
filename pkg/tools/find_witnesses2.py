"""Witness search over classifier variants: mirrored trees, richer features."""

from __future__ import annotations

import sys
from collections import defaultdict

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from groupwalks.thompson import _build_tree_pair_arrays, _infix_carets
from solve_fordham_weights import bfs


def subtree_class(left, right, s) -> int:
    """0 empty, 1 left vine, 2 right vine, 3 spines only, 4 deep."""
    if s == -1:
        return 0
    spine = set()
    v = s
    leftvine = True
    while v != -1:
        spine.add(v)
        if right[v] != -1:
            leftvine = False
        v = left[v]
    if leftvine:
        return 1
    rightvine = True
    v = s
    while v != -1:
        spine.add(v)
        if left[v] != -1 and v != s:
            rightvine = False
        v = right[v]
    stack = [s]
    deep = False
    total = 0
    while stack:
        v = stack.pop()
        if v == -1:
            continue
        total += 1
        if v not in spine:
            deep = True
        stack.append(left[v])
        stack.append(right[v])
    if deep:
        return 4
    if rightvine and left[s] == -1:
        return 2
    return 3


def classify_rich(left, right, root, mirror: bool) -> list[tuple]:
    if mirror:
        left, right = right, left
    n = len(left)
    # positions
    pos = ["I"] * n
    v = root
    first = root
    while v != -1:
        pos[v] = "L"
        first = v
        v = left[v]
    pos[first] = "LF"
    v = right[root]
    while v != -1:
        pos[v] = "RB" if right[v] == -1 else "R"
        v = right[v]
    out = []
    for v in range(n):
        out.append((pos[v], subtree_class(left, right, left[v]), subtree_class(left, right, right[v])))
    order = _infix_carets(left, right, root)
    if mirror:
        order = order[::-1]
    return [out[v] for v in order]


def vector_key(pos, neg, mirror):
    (dl, dr, droot), (rl, rr, rroot) = _build_tree_pair_arrays(
        [i for i, _ in pos], [e for _, e in pos],
        [j for j, _ in neg], [e for _, e in neg],
    )
    dt = classify_rich(dl, dr, droot, mirror)
    rt = classify_rich(rl, rr, rroot, mirror)
    pairs = sorted(tuple(sorted((a, b))) for a, b in zip(dt, rt))
    return tuple(pairs)


def main(radius=7):
    dist = bfs(radius)
    for mirror in (False, True):
        groups = defaultdict(set)
        for (pos, neg), d in dist.items():
            if d == 0:
                continue
            groups[vector_key(pos, neg, mirror)].add(d)
        bad = sum(1 for lens in groups.values() if len(lens) > 1)
        print(f"mirror={mirror}: {bad} conflicting classes of {len(groups)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)

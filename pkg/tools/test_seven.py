"""Test candidate 7-type classifiers for witness-freeness at given radius."""

from __future__ import annotations

import sys
from collections import defaultdict

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from groupwalks.thompson import _build_tree_pair_arrays
from solve_fordham_weights import bfs
from find_witnesses2 import classify_rich


def seven(rich: tuple, scheme: str) -> int:
    pos, lc, rc = rich
    if pos == "LF":
        return 0  # L0
    if pos == "L":
        return 1  # LL
    if pos == "I":
        if scheme.startswith("I-r"):
            return 2 if rc == 0 else 3
        return 2 if lc == 0 else 3
    # right carets
    if lc == 0:
        return 4  # R0
    if scheme.endswith("vine"):
        return 6 if lc == 1 else 5  # RNI = left vine only
    return 6 if lc in (1, 2, 3) else 5  # RNI = no off-spine carets


SCHEMES = ["I-r/vine", "I-r/spines", "I-l/vine", "I-l/spines"]


def main(radius=9):
    dist = bfs(radius)
    richcache = {}

    def vec(pos, neg, scheme):
        (dl, dr, droot), (rl, rr, rroot) = _build_tree_pair_arrays(
            [i for i, _ in pos], [e for _, e in pos],
            [j for j, _ in neg], [e for _, e in neg],
        )
        dt = [seven(t, scheme) for t in classify_rich(dl, dr, droot, False)]
        rt = [seven(t, scheme) for t in classify_rich(rl, rr, rroot, False)]
        pairs = sorted((min(a, b), max(a, b)) for a, b in zip(dt, rt))
        return tuple(pairs)

    for scheme in SCHEMES:
        groups = defaultdict(set)
        for (pos, neg), d in dist.items():
            if d == 0:
                continue
            groups[vec(pos, neg, scheme)].add(d)
        bad = sum(1 for lens in groups.values() if len(lens) > 1)
        print(f"scheme {scheme}: {bad} conflicting classes of {len(groups)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 9)

"""Diagnostic: find elements whose caret-pair type counts coincide but whose
exact lengths differ.  Such witnesses prove the current caret classification
cannot support any weight table, and show what it fails to distinguish."""

from __future__ import annotations

import sys
from collections import defaultdict

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from groupwalks.thompson import Accumulator, _build_tree_pair_arrays, to_tree_pair, NormalForm
from solve_fordham_weights import fine_classify, bfs, FINE_NAMES


def vector_key(pos, neg):
    (dl, dr, droot), (rl, rr, rroot) = _build_tree_pair_arrays(
        [i for i, _ in pos], [e for _, e in pos],
        [j for j, _ in neg], [e for _, e in neg],
    )
    dt = fine_classify(dl, dr, droot)
    rt = fine_classify(rl, rr, rroot)
    pairs = sorted((min(a, b), max(a, b)) for a, b in zip(dt, rt))
    return tuple(pairs)


def main(radius: int = 7):
    dist = bfs(radius)
    groups: dict[tuple, dict[int, list]] = defaultdict(lambda: defaultdict(list))
    for (pos, neg), d in dist.items():
        if d == 0:
            continue
        groups[vector_key(pos, neg)][d].append((pos, neg))
    bad = 0
    for key, by_len in groups.items():
        if len(by_len) > 1:
            bad += 1
            if bad <= 6:
                print("witness class:", [(FINE_NAMES[a], FINE_NAMES[b]) for a, b in key])
                for d, members in sorted(by_len.items()):
                    pos, neg = members[0]
                    tp = to_tree_pair(NormalForm(pos, neg))
                    print(f"  len {d}: pos={pos} neg={neg}")
                    print(f"         D={tp.domain_tree}")
                    print(f"         R={tp.range_tree}")
    print(f"{bad} conflicting classes of {len(groups)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)

"""Discover the minimal caret-type partition supporting an exact weight table.

Starting from the rich (position, left-subtree-class, right-subtree-class)
types, greedily merge type pairs as long as the linear system
"sum of pair weights = exact BFS length" stays solvable, then print the
final classes and the fitted weights.
"""

from __future__ import annotations

import sys
import time
from collections import defaultdict

import numpy as np

sys.path.insert(0, "src")
sys.path.insert(0, "tools")

from groupwalks.thompson import _build_tree_pair_arrays
from solve_fordham_weights import bfs
from find_witnesses2 import classify_rich


def element_pairs(pos, neg):
    (dl, dr, droot), (rl, rr, rroot) = _build_tree_pair_arrays(
        [i for i, _ in pos], [e for _, e in pos],
        [j for j, _ in neg], [e for _, e in neg],
    )
    dt = classify_rich(dl, dr, droot, False)
    rt = classify_rich(rl, rr, rroot, False)
    return list(zip(dt, rt))


def residual(elements, part):
    """Least-squares residual of the weight system under a type partition."""
    eqs = {}
    for pairs, d in elements:
        key_counts = defaultdict(int)
        for a, b in pairs:
            pa, pb = part[a], part[b]
            key_counts[(pa, pb) if pa <= pb else (pb, pa)] += 1
        key = tuple(sorted(key_counts.items()))
        if key in eqs:
            if eqs[key] != d:
                return float("inf")
        else:
            eqs[key] = d
    pair_ids = {}
    rows = []
    rhs = []
    for key, d in eqs.items():
        row = {}
        for pair, c in key:
            row[pair_ids.setdefault(pair, len(pair_ids))] = c
        rows.append(row)
        rhs.append(d)
    A = np.zeros((len(rows), len(pair_ids)))
    for i, row in enumerate(rows):
        for j, c in row.items():
            A[i, j] = c
    b = np.array(rhs, float)
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    return float(np.abs(A @ sol - b).max()), sol, pair_ids, eqs


def main(radius=9):
    dist = bfs(radius)
    t0 = time.time()
    elements = []
    for (pos, neg), d in dist.items():
        if d:
            elements.append((element_pairs(pos, neg), d))
    types = sorted({t for pairs, _ in elements for ab in pairs for t in ab})
    print(f"{len(types)} rich types occur [{time.time()-t0:.0f}s]")
    for t in types:
        print("   ", t)

    part = {t: i for i, t in enumerate(types)}
    r0, *_ = residual(elements, part)
    print(f"initial residual: {r0:.2e}")
    if r0 > 1e-6:
        print("rich classification itself infeasible; stop")
        return

    # greedy agglomeration
    improved = True
    while improved:
        improved = False
        classes = sorted(set(part.values()))
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                a, b = classes[i], classes[j]
                trial = {t: (a if c == b else c) for t, c in part.items()}
                r, *_ = residual(elements, trial)
                if r < 1e-6:
                    part = trial
                    improved = True
                    print(f"merged {a} <- {b}; classes now {len(set(part.values()))}")
                    break
            if improved:
                break

    classes = sorted(set(part.values()))
    print(f"final class count: {len(classes)}")
    relabel = {c: k for k, c in enumerate(classes)}
    groups = defaultdict(list)
    for t, c in part.items():
        groups[relabel[c]].append(t)
    for k in sorted(groups):
        print(f"class {k}: {groups[k]}")
    r, sol, pair_ids, eqs = residual(elements, part)
    print(f"residual {r:.2e}; weights:")
    for (a, b), j in sorted(pair_ids.items(), key=lambda kv: kv[0]):
        print(f"  w({relabel[a] if a in relabel else a},{relabel[b] if b in relabel else b})"
              f" = {sol[j]:.6f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 9)

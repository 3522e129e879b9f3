"""Dev check: exact trivial-word count at L=14 and BFS sphere sizes."""
import time
from collections import defaultdict

from groupwalks.thompson import Accumulator

LETTERS = ((0, 1), (0, -1), (1, 1), (1, -1))


def advance(dist):
    new = defaultdict(int)
    for (pos, neg), c in dist.items():
        for index, sign in LETTERS:
            acc = Accumulator.from_pairs(pos, neg)
            acc.append(index, sign)
            new[acc.pairs()] += c
    return dict(new)


t0 = time.time()
dist = {((), ()): 1}
for step in range(7):
    dist = advance(dist)
total = sum(c * c for c in dist.values())
print(f"T(14) = {total}  (expect 1988452)   states at h=7: {len(dist)}  [{time.time()-t0:.1f}s]")
assert total == 1988452

# BFS sphere sizes to radius 8
t0 = time.time()
visited = {((), ())}
frontier = [((), ())]
sizes = [1]
for r in range(1, 9):
    nxt = []
    for pos, neg in frontier:
        for index, sign in LETTERS:
            acc = Accumulator.from_pairs(pos, neg)
            acc.append(index, sign)
            state = acc.pairs()
            if state not in visited:
                visited.add(state)
                nxt.append(state)
    frontier = nxt
    sizes.append(len(frontier))
print(f"sphere sizes: {sizes}  [{time.time()-t0:.1f}s]")
assert sizes == [1, 4, 12, 36, 108, 314, 906, 2576, 7280], sizes
print("OK")

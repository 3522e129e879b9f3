"""Dev smoke test: normal forms vs the exact PL oracle."""
import itertools
import random
import sys

sys.path.insert(0, "tests")
import pl_oracle as pl

from groupwalks.thompson import (
    Accumulator, NormalForm, normalize, multiply, inverse, is_identity_f, to_word, canonical_key,
)
from groupwalks.words import Letter, Word, parse_word

# 1. relation checks in the PL model itself
for i in range(0, 4):
    for j in range(i + 1, 5):
        lhs = pl.compose(pl.generator_map(j), pl.generator_map(i))
        rhs = pl.compose(pl.generator_map(i), pl.generator_map(j + 1))
        assert lhs == rhs, (i, j)
print("PL model satisfies x_j x_i = x_i x_{j+1} for i<j<=4")

# 2. spec examples
nf = normalize([Letter(1, 1), Letter(0, 1)])
assert nf == NormalForm(pos=((0, 1), (2, 1)), neg=()), nf
assert normalize([Letter(0, 1), Letter(0, -1)]).is_identity()
nf = normalize([Letter(0, 1), Letter(1, 1), Letter(0, -1)])
assert nf == NormalForm(pos=((0, 1), (1, 1)), neg=((0, 1),)), nf

def comm(u, v):
    return u + v + [l.inverse() for l in reversed(u)] + [l.inverse() for l in reversed(v)]

A = [Letter(0, 1), Letter(1, -1)]
B1 = [Letter(0, -1), Letter(1, 1), Letter(0, 1)]
B2 = [Letter(0, -1), Letter(0, -1), Letter(1, 1), Letter(0, 1), Letter(0, 1)]
rel1 = comm(A, B1)
rel2 = comm(A, B2)
assert len(rel1) == 10 and len(rel2) == 14
assert is_identity_f(rel1), normalize(rel1)
assert is_identity_f(rel2), normalize(rel2)
print("finite-presentation relators normalize to the identity")

# 3. random words: normalize must preserve the PL map
rnd = random.Random(7)
for trial in range(300):
    n = rnd.randrange(0, 9)
    word = [Letter(rnd.randrange(0, 3), rnd.choice((1, -1))) for _ in range(n)]
    nf = normalize(word)
    m1 = pl.word_to_map(word)
    m2 = pl.word_to_map(to_word(nf))
    assert m1 == m2, (word, nf)
    assert pl.is_identity_map(m1) == nf.is_identity()
print("300 random words: normal form represents the same PL map")

# 4. uniqueness: same element => same normal form (via PL map keying)
seen: dict = {}
for trial in range(2000):
    n = rnd.randrange(0, 8)
    word = [Letter(rnd.randrange(0, 2), rnd.choice((1, -1))) for _ in range(n)]
    nf = normalize(word)
    m = pl.word_to_map(word)
    if m in seen:
        assert seen[m] == nf, (m, seen[m], nf)
    else:
        seen[m] = nf
print(f"2000 random words hashed to {len(seen)} PL maps with consistent normal forms")

# 5. multiply associativity + inverse laws on random normal forms
forms = list(seen.values())
for trial in range(500):
    u, v, w = rnd.choice(forms), rnd.choice(forms), rnd.choice(forms)
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
    assert multiply(u, inverse(u)).is_identity()
    assert inverse(inverse(u)) == u
print("associativity and inverse laws hold on 500 random triples")

# 6. normal form validity invariants
def check_valid(nf):
    for part in (nf.pos, nf.neg):
        idx = [i for i, _ in part]
        assert idx == sorted(set(idx)), nf
        assert all(e > 0 for _, e in part), nf
    pos_idx = {i for i, _ in nf.pos}
    neg_idx = {j for j, _ in nf.neg}
    for i in pos_idx & neg_idx:
        assert (i + 1 in pos_idx) or (i + 1 in neg_idx), nf

for nf in forms:
    check_valid(nf)
print("all normal forms satisfy ordering and uniqueness conditions")
print("OK")

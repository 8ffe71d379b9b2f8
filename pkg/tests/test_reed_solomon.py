import itertools
import random

import numpy as np
import pytest

from gcdec.errors import InvalidParams, LengthMismatch
from gcdec.galois import Field
from gcdec.reed_solomon import RSCode, berlekamp_massey

GF8 = Field(3)
RS735 = RSCode(GF8, 7, 3)


def all_codewords(code):
    return [code.encode(list(u)) for u in itertools.product(range(code.field.size), repeat=code.k)]


def test_parameters():
    assert RS735.d == 5
    with pytest.raises(InvalidParams):
        RSCode(GF8, 8, 3)
    with pytest.raises(LengthMismatch):
        RS735.encode([1, 2])


def test_zero_and_round_trip():
    assert RS735.encode([0, 0, 0]) == [0] * 7
    c = RS735.encode([1, 2, 3])
    assert RS735.is_codeword(c)
    res = RS735.decode(c)
    assert list(res.info) == [1, 2, 3] and res.n_errors == 0


def test_minimum_distance_exhaustive():
    words = np.array(all_codewords(RS735))
    assert len(words) == 512
    dmin = min(int((words[i] != words[i + 1 :]).sum(axis=1).min()) for i in range(511))
    assert dmin == 5


def test_two_errors_and_four_erasures():
    c = RS735.encode([5, 0, 7])
    r = list(c)
    r[0] ^= 3
    r[6] ^= 1
    assert list(RS735.decode(r).codeword) == c
    e = list(c)
    for j in (1, 2, 4, 5):
        e[j] = None
    res = RS735.decode(e)
    assert list(res.codeword) == c and res.n_erasures == 4


def test_three_errors_fail_or_bmd_consistent():
    words = np.array(all_codewords(RS735))
    rng = random.Random(0)
    for _ in range(300):
        c = words[rng.randrange(512)]
        r = c.copy()
        for j in rng.sample(range(7), 3):
            r[j] ^= rng.randrange(1, 8)
        res = RS735.decode(list(r))
        dist = (words != r).sum(axis=1)
        if res is None:
            assert dist.min() > 2
        else:
            assert dist.min() <= 2 and list(res.codeword) == list(words[dist.argmin()])


@pytest.mark.parametrize(
    "code, trials",
    [(RSCode(Field(4), 15, 7), 10_000), (RSCode(Field(4), 15, 11), 10_000), (RSCode(Field(8), 255, 223), 300)],
    ids=["rs15_7", "rs15_11", "rs255_223"],
)
def test_error_erasure_guarantee_random(code, trials):
    rng = random.Random(1)
    q = code.field.size
    for _ in range(trials):
        c = code.encode([rng.randrange(q) for _ in range(code.k)])
        tau = rng.randrange(code.d)
        eps = rng.randrange((code.d - tau - 1) // 2 + 1)
        pos = rng.sample(range(code.n), tau + eps)
        r = list(c)
        for j in pos[:tau]:
            r[j] = None
        for j in pos[tau:]:
            r[j] ^= rng.randrange(1, q)
        res = code.decode(r)
        assert res is not None and list(res.codeword) == c
        assert res.n_errors == eps and res.n_erasures == tau


def test_mds_any_k_positions_determine_codeword():
    c = RS735.encode([3, 1, 4])
    for keep in itertools.combinations(range(7), 3):
        r = [c[j] if j in keep else None for j in range(7)]
        assert list(RS735.decode(r).codeword) == c


def test_too_many_erasures_fails():
    assert RS735.decode([None] * 5 + [0, 0]) is None


def test_berlekamp_massey_fibonacci_like():
    f = Field(4)
    # s_{i} = s_{i-1} + s_{i-2} in GF(16): connection 1 + x + x^2
    seq = [1, 1]
    for _ in range(6):
        seq.append(seq[-1] ^ seq[-2])
    conn, length = berlekamp_massey(f, seq)
    assert length == 2 and conn == [1, 1, 1]

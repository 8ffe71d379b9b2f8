import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcdec.errors import DistanceMismatch, InvalidParams, NonMonotoneDistances, RankDeficient
from gcdec.inner_code import NestedBinaryCode, pack_bits, unpack_bits

SIMPLEX = [[1, 0, 0, 1, 0, 1, 1], [0, 1, 0, 1, 1, 1, 0], [0, 0, 1, 0, 1, 1, 1]]
TWO_LEVEL = [[1, 1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 1]] + SIMPLEX


@pytest.fixture(scope="module")
def code():
    return NestedBinaryCode(TWO_LEVEL, 2, 3)


def codewords_by_bruteforce(g):
    g = np.array(g)
    return {tuple(np.array(u) @ g % 2) for u in itertools.product([0, 1], repeat=len(g))}


def test_simplex_distance():
    assert NestedBinaryCode(SIMPLEX, 1, 3).level_distances == (4,)


def test_two_word_code_distances():
    assert NestedBinaryCode([[1, 1, 1, 1], [0, 1, 0, 1]], 2, 1).level_distances == (2, 2)


def test_rank_deficient():
    with pytest.raises(RankDeficient):
        NestedBinaryCode([[1, 1, 0], [1, 1, 0]], 2, 1)


def test_claimed_distances_checked():
    NestedBinaryCode(TWO_LEVEL, 2, 3, claimed_distances=[2, 4])
    with pytest.raises(DistanceMismatch):
        NestedBinaryCode(TWO_LEVEL, 2, 3, claimed_distances=[2, 5])


def test_decreasing_claim_rejected():
    # a subcode never has smaller distance, so only an unverified claim can do this
    with pytest.raises(NonMonotoneDistances), pytest.warns(UserWarning):
        NestedBinaryCode(TWO_LEVEL, 2, 3, claimed_distances=[4, 2], verify=False)


def test_unverified_needs_claim():
    with pytest.raises(InvalidParams):
        NestedBinaryCode(TWO_LEVEL, 2, 3, verify=False)
    with pytest.warns(UserWarning):
        c = NestedBinaryCode(TWO_LEVEL, 2, 3, claimed_distances=[2, 4], verify=False)
    assert not c.verified


def test_encode_linear_map(code):
    assert not code.encode([0] * 6).any()
    for i in range(6):
        unit = [0] * 6
        unit[i] = 1
        assert list(code.encode(unit)) == TWO_LEVEL[i]


def test_table_matches_bruteforce(code):
    table = {tuple(unpack_bits(w[None, :], 7)[0]) for w in code.table}
    assert table == codewords_by_bruteforce(TWO_LEVEL)


def test_nesting(code):
    sub = {tuple(unpack_bits(w[None, :], 7)[0]) for w in code.subcode(1)}
    assert sub == codewords_by_bruteforce(SIMPLEX)
    full = {tuple(unpack_bits(w[None, :], 7)[0]) for w in code.table}
    assert sub <= full


@given(st.lists(st.integers(0, 1), min_size=6, max_size=6))
def test_unencode_inverts_encode(code, bits):
    assert list(code.unencode(code.encode(bits))) == bits


def test_pack_round_trip():
    rng = np.random.default_rng(0)
    bits = rng.integers(0, 2, size=(5, 130)).astype(np.uint8)
    assert (unpack_bits(pack_bits(bits), 130) == bits).all()


def test_decode_examples(code):
    c = code.encode([1, 0, 1, 1, 1, 0])
    out = code.coset_bmd_decode(c, 1, [1, 0, 1])
    assert out.decoded and out.delta == 0 and list(out.codeword) == list(c)
    flipped = c.copy()
    flipped[4] ^= 1
    out = code.coset_bmd_decode(flipped, 1, [1, 0, 1])
    assert out.decoded and out.delta == 1 and list(out.codeword) == list(c)


def test_coset_decode_exhaustive_against_oracle(code):
    """Every received word, every prefix: BMD outcome equals the nearest-coset-word oracle."""
    for level in range(2):
        r = code.radius(level)
        for prefix_int in range(1 << (3 * level)):
            prefix = [(prefix_int >> i) & 1 for i in range(3 * level)]
            coset = []
            for rest in itertools.product([0, 1], repeat=6 - 3 * level):
                coset.append(code.encode(prefix + list(rest)))
            coset = np.array(coset)
            for word in itertools.product([0, 1], repeat=7):
                w = np.array(word, dtype=np.uint8)
                dist = (coset ^ w).sum(axis=1)
                best = dist.min()
                out = code.coset_bmd_decode(w, level, prefix)
                if best <= r:
                    assert out.decoded and out.delta == best
                    assert list(out.codeword) == list(coset[dist.argmin()])
                    full = int("".join(map(str, code.unencode(out.codeword)[::-1])), 2)
                    assert out.info == full >> (3 * level)
                    assert out.info_symbol == out.info & 0b111
                else:
                    assert not out.decoded


@settings(max_examples=50)
@given(st.integers(0, 63), st.sets(st.integers(0, 6), max_size=1), st.integers(0, 1))
def test_bmd_soundness(code, info, flips, level):
    bits = [(info >> i) & 1 for i in range(6)]
    c = code.encode(bits)
    r = c.copy()
    for j in flips:
        if len(flips) <= code.radius(level):
            r[j] ^= 1
    out = code.coset_bmd_decode(r, level, bits[: 3 * level])
    assert out.decoded and list(out.codeword) == list(c)
    assert out.delta <= code.radius(level)

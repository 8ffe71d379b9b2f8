import itertools
import random

import pytest

from gcdec.errors import ConstraintViolated, HeterogeneousLength
from gcdec.galois import Field
from gcdec.interleaved_rs import IRSCode
from gcdec.reed_solomon import RSCode

GF8, GF16, GF256 = Field(3), Field(4), Field(8)


def test_parameters_from_large_rows():
    irs = IRSCode([RSCode(GF256, 255, 223)] * 2)
    assert irs.d_bar == 33 and irs.lam == 1.5 and irs.capacity == 21
    assert irs.collaborative_radius(0) == (21, 16)
    assert irs.collaborative_radius(32) == (0, 0)


def test_single_row_degenerates_to_bmd():
    irs = IRSCode([RSCode(GF8, 7, 3)])
    assert irs.capacity == 2 and irs.collaborative_radius(0) == (2, 2)


def test_constraint_violation():
    with pytest.raises(ConstraintViolated):
        IRSCode([RSCode(GF16, 15, 13), RSCode(GF16, 15, 1)])


def test_heterogeneous_length():
    with pytest.raises(HeterogeneousLength):
        IRSCode([RSCode(GF16, 15, 7), RSCode(GF16, 14, 7)])


def test_three_rows_radius():
    irs = IRSCode([RSCode(GF16, 15, 7)] * 3)
    assert irs.collaborative_radius(0) == (6, 4)


def test_identity():
    irs = IRSCode([RSCode(GF16, 15, 7)] * 3)
    rows = irs.encode([[1] * 7, [2] * 7, [3] * 7])
    res = irs.decode(rows)
    assert [list(r) for r in res.rows] == rows and res.n_errors == 0


def test_single_row_agrees_with_rs_decoder_exhaustively():
    """All received words at distance <= 3 from one codeword, plus erasure patterns."""
    rs = RSCode(GF8, 7, 3)
    irs = IRSCode([rs])
    c = rs.encode([6, 1, 3])
    rng = random.Random(2)
    for tau in range(0, 5):
        for erased in itertools.combinations(range(7), tau):
            free = [j for j in range(7) if j not in erased]
            for eps in range(0, 4):
                for pos in itertools.combinations(free, eps):
                    r = list(c)
                    for j in erased:
                        r[j] = None
                    for j in pos:
                        r[j] ^= rng.randrange(1, 8)
                    a = rs.decode(r)
                    b = irs.decode([r])
                    assert (a is None) == (b is None), (r, a, b)
                    if a is not None:
                        assert list(a.codeword) == list(b.rows[0])


def test_guaranteed_region_exhaustive_positions():
    """n=7, two rows: every error-column and erasure set inside the BMD region decodes."""
    rows = [RSCode(GF8, 7, 3), RSCode(GF8, 7, 3)]
    irs = IRSCode(rows)
    rng = random.Random(3)
    cw = irs.encode([[1, 2, 3], [4, 5, 6]])
    for tau in range(0, 5):
        for erased in itertools.combinations(range(7), tau):
            free = [j for j in range(7) if j not in erased]
            for eps in range(0, (irs.d_min - 1 - tau) // 2 + 1):
                for pos in itertools.combinations(free, eps):
                    for _ in range(3):
                        m = [list(r) for r in cw]
                        for j in erased:
                            m[0][j] = None
                            m[1][j] = None
                        for j in pos:
                            vals = [0, 0]
                            while vals == [0, 0]:
                                vals = [rng.randrange(8), rng.randrange(8)]
                            m[0][j] ^= vals[0]
                            m[1][j] ^= vals[1]
                        res = irs.decode(m)
                        assert res is not None and [list(r) for r in res.rows] == cw


def test_detection_at_bd_limit():
    """At lam*eps + tau = d_bar - 1 every non-recovery is a flagged failure."""
    irs = IRSCode([RSCode(GF16, 15, 7)] * 3)
    rng = random.Random(4)
    cw = irs.encode([[rng.randrange(16) for _ in range(7)] for _ in range(3)])
    for tau, eps in ((0, 6), (4, 3)):
        for _ in range(1000):
            pos = rng.sample(range(15), tau + eps)
            m = [list(r) for r in cw]
            for j in pos[:tau]:
                for row in m:
                    row[j] = None
            for j in pos[tau:]:
                for row in m:
                    row[j] ^= rng.randrange(1, 16)
            res = irs.decode(m)
            if res is not None:
                assert [list(r) for r in res.rows] == cw


def test_heterogeneous_rows_decode():
    irs = IRSCode([RSCode(GF16, 15, 5), RSCode(GF16, 15, 7)])
    rng = random.Random(5)
    for _ in range(300):
        cw = irs.encode([[rng.randrange(16) for _ in range(r.k)] for r in irs.rows])
        m = [list(r) for r in cw]
        for j in rng.sample(range(15), 4):
            for row in m:
                row[j] ^= rng.randrange(1, 16)
        res = irs.decode(m)
        assert res is not None and [list(r) for r in res.rows] == cw

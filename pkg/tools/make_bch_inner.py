"""Build a nested [60, 16] binary inner code from primitive BCH codes of length 63.

Rows 8..15 span a subcode of the [63, 10, 27] BCH code, rows 0..7 complete a
basis of the [63, 16, 23] BCH code.  Puncturing three coordinates taken from
the support of a minimum-weight codeword gives level distances (20, >= 24).

Usage: python3 tools/make_bch_inner.py configs/inner_bch60_16.txt
"""

import sys

import numpy as np

from gcdec.galois import Field
from gcdec.inner_code import pack_bits

N = 63


def minimal_poly(f: Field, e: int) -> list[int]:
    """Binary minimal polynomial of alpha^e, lowest degree first."""
    coset, x = [], e
    while x not in coset:
        coset.append(x)
        x = 2 * x % f.order
    poly = [1]
    for c in coset:
        poly = f.poly_mul(poly, [f.alpha(c), 1])
    assert all(v in (0, 1) for v in poly)
    return poly


def bch_generator(f: Field, designed: int) -> list[int]:
    g, seen = [1], set()
    for e in range(1, designed):
        rep = min((e << s) % f.order for s in range(f.m))
        if rep not in seen:
            seen.add(rep)
            g = f.poly_mul(g, minimal_poly(f, e))
    return g


def shifts(g: list[int], count: int) -> np.ndarray:
    rows = np.zeros((count, N), dtype=np.uint8)
    for i in range(count):
        rows[i, i : i + len(g)] = g
    return rows


def main(out: str) -> None:
    f = Field(6, 0b1000011)
    big = shifts(bch_generator(f, 23), 16)  # [63,16,23]
    small = shifts(bch_generator(f, 27), 10)  # [63,10,27], a subcode of big
    assert big.shape[0] == 16 and small.shape[0] == 10
    level1 = small[:8]
    # complete level1 to a basis of the big code with rows of big
    basis = [int("".join(map(str, r)), 2) for r in level1]
    level0 = []
    for r in big:
        v = int("".join(map(str, r)), 2)
        trial = basis + [v]
        if _rank(trial) == len(trial):
            basis.append(v)
            level0.append(r)
        if len(level0) == 8:
            break
    g = np.vstack([np.array(level0), level1])
    # minimum-weight codeword of the full code picks the punctured coordinates
    table = np.zeros((1, 1), dtype=np.uint64)
    for row in pack_bits(g):
        table = np.concatenate([table, table ^ row])
    w = np.bitwise_count(table[1:, 0])
    best = int(np.argmin(w)) + 1
    word = np.zeros(N, dtype=np.uint8)
    for i in range(16):
        if best >> i & 1:
            word ^= g[i]
    drop = np.flatnonzero(word)[:3]
    g = np.delete(g, drop, axis=1)
    with open(out, "w") as fh:
        fh.write("\n".join("".join(map(str, r)) for r in g) + "\n")


def _rank(rows: list[int]) -> int:
    rows, rank = list(rows), 0
    for bit in range(N - 1, -1, -1):
        piv = next((i for i in range(rank, len(rows)) if rows[i] >> bit & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> bit & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


if __name__ == "__main__":
    main(sys.argv[1])

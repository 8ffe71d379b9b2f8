"""Binary nested inner code with exhaustive coset BMD decoding.

Generator rows are ordered by level: level ``l`` owns rows ``[l*m, (l+1)*m)``.
Fixing the first ``l*m`` information bits selects a coset of the subcode
spanned by rows ``l*m..k-1``; its minimum distance is the level distance.

Codewords are handled packed: a column of ``n`` bits becomes ``W = ceil(n/64)``
little-endian uint64 words, bit ``i`` holding row ``i``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DistanceMismatch,
    InvalidParams,
    LengthMismatch,
    NonMonotoneDistances,
    RankDeficient,
)

MAX_VERIFY_K = 20
MAX_TABLE_K = 24

DECODED = "decoded"
FAILURE = "failure"


def pack_bits(bits) -> np.ndarray:
    """Pack the last axis of a 0/1 array into little-endian uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    words = (n + 63) // 64
    packed = np.packbits(bits, axis=-1, bitorder="little")
    pad = words * 8 - packed.shape[-1]
    if pad:
        widths = [(0, 0)] * (packed.ndim - 1) + [(0, pad)]
        packed = np.pad(packed, widths)
    return np.ascontiguousarray(packed).view("<u8")


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    bits = np.unpackbits(words.view(np.uint8), axis=-1, bitorder="little")
    return bits[..., :n]


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as int bitmasks."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


@dataclass(frozen=True)
class InnerDecodeOutcome:
    status: str
    delta: int | None = None
    codeword: np.ndarray | None = None
    info: int | None = None  # all information bits from the decoded level upward
    info_symbol: int | None = None  # the m-bit chunk of the decoded level

    @property
    def decoded(self) -> bool:
        return self.status == DECODED


class NestedBinaryCode:
    """Binary linear code C(n, k = ell*m) with nested level subcodes."""

    def __init__(self, generator, ell: int, m: int, claimed_distances=None, verify: bool = True):
        g = np.array(generator, dtype=np.uint8)
        if g.ndim != 2:
            raise InvalidParams("generator must be a 2-D 0/1 matrix")
        if ell < 1 or m < 1:
            raise InvalidParams("ell and m must be positive")
        k, n = g.shape
        if k != ell * m:
            raise InvalidParams(f"generator has {k} rows, expected ell*m = {ell * m}")
        if k > n:
            raise InvalidParams(f"k={k} exceeds n={n}")
        if np.any(g > 1):
            raise InvalidParams("generator entries must be 0 or 1")
        self.generator = g
        self.n = n
        self.k = k
        self.ell = ell
        self.m = m
        self.words = (n + 63) // 64
        self._rows = pack_bits(g)  # (k, W)

        row_ints = [int("".join(map(str, r[::-1])), 2) for r in g]
        if gf2_rank(row_ints) < k:
            raise RankDeficient("generator rows are linearly dependent")
        self._pivots, self._pivot_inverse = self._systematic_inverse()

        self._table = None
        self.verified = False
        if verify and k > MAX_VERIFY_K:
            if claimed_distances is None:
                raise InvalidParams(
                    f"k={k} > {MAX_VERIFY_K}: supply claimed distances and verify=False"
                )
            verify = False
        if verify:
            distances = self._exhaustive_distances()
            if claimed_distances is not None and list(claimed_distances) != distances:
                raise DistanceMismatch(
                    f"claimed {list(claimed_distances)}, computed {distances}"
                )
            self.verified = True
        else:
            if claimed_distances is None:
                raise InvalidParams("verification skipped but no distances claimed")
            distances = [int(d) for d in claimed_distances]
            if len(distances) != ell:
                raise InvalidParams(f"need {ell} level distances, got {len(distances)}")
            warnings.warn("inner code distances trusted without verification", stacklevel=2)
        if any(a > b for a, b in zip(distances, distances[1:])):
            raise NonMonotoneDistances(f"level distances {distances} are not non-decreasing")
        self.level_distances = tuple(distances)

    @classmethod
    def from_file(cls, path, ell: int, m: int, **kwargs) -> "NestedBinaryCode":
        rows = []
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                if set(line) - {"0", "1"}:
                    raise InvalidParams(f"{path}:{lineno}: only '0'/'1' allowed")
                rows.append([int(c) for c in line])
        if not rows or len({len(r) for r in rows}) != 1:
            raise InvalidParams(f"{path}: rows missing or of unequal length")
        return cls(rows, ell, m, **kwargs)

    def radius(self, level: int) -> int:
        return (self.level_distances[level] - 1) // 2

    # -- tables ---------------------------------------------------------

    @property
    def table(self) -> np.ndarray:
        """All 2^k codewords, index bit ``i`` selecting generator row ``i``."""
        if self._table is None:
            if self.k > MAX_TABLE_K:
                raise InvalidParams(f"k={self.k} too large for exhaustive tables")
            table = np.zeros((1, self.words), dtype=np.uint64)
            for row in self._rows:
                table = np.concatenate([table, table ^ row])
            self._table = table
        return self._table

    def subcode(self, level: int) -> np.ndarray:
        """Codewords of the level subcode, indexed by the info bits of levels >= level."""
        return self.table[:: 1 << (level * self.m)]

    def _exhaustive_distances(self) -> list[int]:
        out = []
        for level in range(self.ell):
            weights = np.bitwise_count(self.subcode(level)[1:]).sum(axis=1)
            out.append(int(weights.min()))
        return out

    def _systematic_inverse(self):
        """Pick k information positions and the inverse of G restricted to them."""
        g = self.generator.astype(np.uint8)
        k, n = g.shape
        # greedy pick of k linearly independent columns
        pivots = []
        basis = []
        for col in range(n):
            v = int("".join(str(b) for b in g[::-1, col]), 2)
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                pivots.append(col)
            if len(pivots) == k:
                break
        sub = g[:, pivots]  # k x k, invertible
        inv = _gf2_inverse(sub)
        return pivots, inv

    # -- encoding -------------------------------------------------------

    def encode(self, info_bits) -> np.ndarray:
        """Codeword (0/1 array of length n) for ``k`` information bits."""
        info = np.asarray(list(info_bits), dtype=np.uint8)
        if info.shape != (self.k,):
            raise LengthMismatch(f"expected {self.k} info bits, got {info.shape[0]}")
        return (info @ self.generator) % 2

    def encode_packed(self, info: int) -> np.ndarray:
        """Packed codeword for info bits given as an int (bit i -> row i)."""
        if self._table is not None or self.k <= MAX_VERIFY_K:
            return self.table[info].copy()
        out = np.zeros(self.words, dtype=np.uint64)
        for i in range(self.k):
            if (info >> i) & 1:
                out ^= self._rows[i]
        return out

    def unencode(self, codeword) -> np.ndarray:
        """Inverse of :meth:`encode` on codewords."""
        c = np.asarray(codeword, dtype=np.uint8)
        if c.shape != (self.n,):
            raise LengthMismatch(f"expected {self.n} bits, got {c.shape}")
        info = (c[self._pivots] @ self._pivot_inverse) % 2
        if not np.array_equal(self.encode(info), c):
            raise InvalidParams("word is not a codeword")
        return info

    def is_codeword(self, word) -> bool:
        c = np.asarray(word, dtype=np.uint8)
        info = (c[self._pivots] @ self._pivot_inverse) % 2
        return bool(np.array_equal(self.encode(info), c))

    # -- decoding -------------------------------------------------------

    def decode_packed(self, received: np.ndarray, level: int, prefix: int) -> InnerDecodeOutcome:
        """Coset BMD decoding of a packed word.

        ``prefix`` holds the ``level*m`` already-decided info bits as an int.
        The nearest subcode word is searched exhaustively and accepted only
        within the level's BMD radius.
        """
        if not 0 <= level < self.ell:
            raise InvalidParams(f"level {level} outside [0, {self.ell})")
        if prefix >> (level * self.m):
            raise InvalidParams("prefix has bits beyond the fixed levels")
        target = received ^ self.table[prefix]
        dist = np.bitwise_count(self.subcode(level) ^ target).sum(axis=1)
        idx = int(np.argmin(dist))
        delta = int(dist[idx])
        if delta > self.radius(level):
            return InnerDecodeOutcome(FAILURE)
        codeword = self.table[prefix | (idx << (level * self.m))]
        return InnerDecodeOutcome(
            DECODED,
            delta=delta,
            codeword=codeword,
            info=idx,
            info_symbol=idx & ((1 << self.m) - 1),
        )

    def coset_bmd_decode(self, received, level: int, fixed_prefix) -> InnerDecodeOutcome:
        """Bit-sequence front end of :meth:`decode_packed`.

        ``fixed_prefix`` is the sequence of ``level*m`` decided info bits.
        The returned ``codeword`` is unpacked to a 0/1 array.
        """
        r = np.asarray(received, dtype=np.uint8)
        if r.shape != (self.n,):
            raise LengthMismatch(f"expected {self.n} bits, got {r.shape}")
        fixed_prefix = list(fixed_prefix)
        if len(fixed_prefix) != level * self.m:
            raise LengthMismatch(f"prefix must have {level * self.m} bits")
        prefix = sum(int(b) << i for i, b in enumerate(fixed_prefix))
        out = self.decode_packed(pack_bits(r), level, prefix)
        if not out.decoded:
            return out
        return InnerDecodeOutcome(
            DECODED,
            delta=out.delta,
            codeword=unpack_bits(out.codeword, self.n),
            info=out.info,
            info_symbol=out.info_symbol,
        )


def _gf2_inverse(a: np.ndarray) -> np.ndarray:
    k = a.shape[0]
    aug = np.concatenate([a.copy() % 2, np.eye(k, dtype=np.uint8)], axis=1)
    for c in range(k):
        p = c + int(np.argmax(aug[c:, c]))
        if not aug[p, c]:
            raise RankDeficient("singular matrix over GF(2)")
        if p != c:
            aug[[c, p]] = aug[[p, c]]
        mask = aug[:, c].astype(bool)
        mask[c] = False
        aug[mask] ^= aug[c]
    return aug[:, k:].copy()

"""Arithmetic in GF(2^m), 2 <= m <= 16, with log/antilog tables.

Symbols are plain ints in ``[0, 2^m)``; bit ``i`` is the coefficient of ``x^i``.
"""

from __future__ import annotations

from .errors import DegreeOutOfRange, LengthMismatch, NonPrimitiveModulus

DEFAULT_MODULI = {
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
}


class Field:
    """The field GF(2^m) defined by a primitive polynomial ``modulus``."""

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= 16:
            raise DegreeOutOfRange(f"m={m} outside [2, 16]")
        if modulus is None:
            if m not in DEFAULT_MODULI:
                raise NonPrimitiveModulus(f"no default primitive polynomial for m={m}")
            modulus = DEFAULT_MODULI[m]
        if modulus.bit_length() != m + 1:
            raise DegreeOutOfRange(f"modulus {modulus:#b} does not have degree {m}")
        self.m = m
        self.modulus = modulus
        self.size = 1 << m
        self.order = self.size - 1

        # exp is doubled so mul never needs a modulo
        exp = [0] * (2 * self.order)
        log = [0] * self.size
        x = 1
        for i in range(self.order):
            if i > 0 and x == 1:
                raise NonPrimitiveModulus(
                    f"{modulus:#b}: x has order {i}, expected {self.order}"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.size:
                x ^= modulus
        if x != 1:
            # x^order != 1 means the modulus is reducible with x not a unit root
            raise NonPrimitiveModulus(f"{modulus:#b} is not primitive")
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self.exp = exp
        self.log = log

    def __repr__(self):
        return f"Field(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self.exp[(self.order - self.log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0 in GF(2^m)")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % self.order]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha(self, e: int) -> int:
        """Power of the primitive element, any integer exponent."""
        return self.exp[e % self.order]

    # -- polynomials: coefficient lists, lowest degree first -------------

    def poly_eval(self, p: list[int], x: int) -> int:
        y = 0
        for c in reversed(p):
            y = self.mul(y, x) ^ c
        return y

    def poly_mul(self, p: list[int], q: list[int]) -> list[int]:
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a == 0:
                continue
            for j, b in enumerate(q):
                out[i + j] ^= self.mul(a, b)
        return out

    # -- m-bit chunk <-> symbol --------------------------------------------

    def bits_to_symbol(self, bits) -> int:
        """LSB-first: ``bits[i]`` is the coefficient of ``x^i``."""
        bits = list(bits)
        if len(bits) != self.m:
            raise LengthMismatch(f"expected {self.m} bits, got {len(bits)}")
        value = 0
        for i, b in enumerate(bits):
            if b:
                value |= 1 << i
        return value

    def symbol_to_bits(self, a: int) -> list[int]:
        return [(a >> i) & 1 for i in range(self.m)]


def solve(field: Field, rows: list[list[int]], rhs: list[int]):
    """Solve ``rows @ x = rhs`` over the field by Gauss-Jordan elimination.

    Returns ``(particular, nullspace)`` with ``nullspace`` a list of basis
    vectors, or ``None`` if the system is inconsistent.
    """
    n_cols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv_inv = field.inv(aug[r][c])
        aug[r] = [field.mul(piv_inv, v) for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                row_r = aug[r]
                aug[i] = [v ^ field.mul(f, w) for v, w in zip(aug[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if any(row[-1] for row in aug[r:]):
        return None
    x = [0] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    free = [c for c in range(n_cols) if c not in pivots]
    nullspace = []
    for f in free:
        v = [0] * n_cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = aug[i][f]  # char 2: -a == a
        nullspace.append(v)
    return x, nullspace

"""Reed-Solomon codes over GF(2^m) with error/erasure BMD decoding.

Position ``j`` of a codeword has locator ``alpha^j``; codewords satisfy
``c(alpha^i) = 0`` for ``i = 1..d-1``.  Encoding is systematic with the
information symbols in the last ``k`` positions.  Lengths below ``2^m - 1``
give shortened codes with the same locators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, LengthMismatch
from .galois import Field

# An outer word: symbols, with None marking an erased position.
SymbolWord = list


@dataclass(frozen=True)
class RSDecodeResult:
    codeword: tuple[int, ...]
    info: tuple[int, ...]
    n_errors: int
    n_erasures: int
    error_positions: tuple[int, ...]


class RSCode:
    def __init__(self, field: Field, n: int, k: int):
        if not 1 <= k <= n <= field.order:
            raise InvalidParams(f"need 1 <= k <= n <= {field.order}, got n={n}, k={k}")
        self.field = field
        self.n = n
        self.k = k
        self.d = n - k + 1
        gen = [1]
        for i in range(1, self.d):
            gen = field.poly_mul(gen, [field.alpha(i), 1])
        self.generator = gen
        self.locators = [field.alpha(j) for j in range(n)]

    def __repr__(self):
        return f"RSCode(GF(2^{self.field.m}), n={self.n}, k={self.k}, d={self.d})"

    def __eq__(self, other):
        return isinstance(other, RSCode) and (self.field, self.n, self.k) == (
            other.field,
            other.n,
            other.k,
        )

    def __hash__(self):
        return hash((self.field, self.n, self.k))

    def encode(self, info) -> list[int]:
        info = list(info)
        if len(info) != self.k:
            raise LengthMismatch(f"expected {self.k} info symbols, got {len(info)}")
        f = self.field
        nk = self.n - self.k
        # remainder of x^(n-k) u(x) modulo the monic generator
        rem = [0] * nk + info
        for i in range(self.n - 1, nk - 1, -1):
            coef = rem[i]
            if coef:
                for j, g in enumerate(self.generator):
                    rem[i - nk + j] ^= f.mul(coef, g)
        return rem[:nk] + info

    def extract_info(self, codeword) -> list[int]:
        return list(codeword[self.n - self.k :])

    def syndromes(self, word) -> list[int]:
        f = self.field
        out = []
        for i in range(1, self.d):
            s = 0
            for j, c in enumerate(word):
                if c:
                    s ^= f.mul(c, f.alpha(i * j))
            out.append(s)
        return out

    def is_codeword(self, word) -> bool:
        return len(word) == self.n and not any(self.syndromes(word))

    def decode(self, word: SymbolWord) -> RSDecodeResult | None:
        """Error/erasure decoding; ``None`` marks erasures in ``word``.

        Returns the unique codeword with ``2*errors + erasures < d`` or
        ``None`` (decoding failure) when there is none.
        """
        if len(word) != self.n:
            raise LengthMismatch(f"expected {self.n} symbols, got {len(word)}")
        f = self.field
        erased = [j for j, s in enumerate(word) if s is None]
        tau = len(erased)
        if tau > self.d - 1:
            return None
        filled = [0 if s is None else s for s in word]
        synd = self.syndromes(filled)

        if not any(synd):
            return self._result(filled, word, erased)

        gamma = [1]
        for j in erased:
            gamma = f.poly_mul(gamma, [1, self.locators[j]])

        # Forney syndromes: only error locators remain in positions tau..d-2
        mod_synd = f.poly_mul(gamma, synd)[tau : self.d - 1]
        lam, n_err = berlekamp_massey(f, mod_synd)
        # a vanishing top coefficient means a root at zero: no valid locator
        if lam[-1] == 0 or 2 * n_err + tau > self.d - 1:
            return None

        erased_set = set(erased)
        err_pos = [
            j
            for j in range(self.n)
            if j not in erased_set and f.poly_eval(lam, f.alpha(-j)) == 0
        ]
        if len(err_pos) != n_err:
            return None

        psi = f.poly_mul(lam, gamma)
        omega = f.poly_mul(synd, psi)[: self.d - 1]
        dpsi = [psi[i] if i % 2 == 1 else 0 for i in range(1, len(psi))]
        corrected = list(filled)
        for j in err_pos + erased:
            xinv = f.alpha(-j)
            den = f.poly_eval(dpsi, xinv)
            if den == 0:
                return None
            corrected[j] ^= f.div(f.poly_eval(omega, xinv), den)
        if any(self.syndromes(corrected)):
            return None
        return self._result(corrected, word, erased)

    def _result(self, codeword, word, erased):
        errs = tuple(
            j for j, (c, r) in enumerate(zip(codeword, word)) if r is not None and c != r
        )
        if 2 * len(errs) + len(erased) >= self.d:
            return None
        return RSDecodeResult(
            codeword=tuple(codeword),
            info=tuple(self.extract_info(codeword)),
            n_errors=len(errs),
            n_erasures=len(erased),
            error_positions=errs,
        )


def berlekamp_massey(field: Field, seq: list[int]) -> tuple[list[int], int]:
    """Shortest LFSR generating ``seq``.

    Returns ``(connection, length)`` with ``connection[0] == 1``, lowest degree
    first, padded to ``length + 1`` coefficients.
    """
    f = field
    c = [1]
    b = [1]
    length = 0
    shift = 1
    last = 1
    for n, s in enumerate(seq):
        disc = s
        for i in range(1, min(length, len(c) - 1) + 1):
            disc ^= f.mul(c[i], seq[n - i])
        if disc == 0:
            shift += 1
            continue
        coef = f.div(disc, last)
        update = [0] * shift + [f.mul(coef, x) for x in b]
        new_c = [x ^ y for x, y in _zip_pad(c, update)]
        if 2 * length <= n:
            b = c
            length = n + 1 - length
            last = disc
            shift = 1
        else:
            shift += 1
        c = new_c
    c = (c + [0] * (length + 1))[: length + 1]
    return c, length


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))

"""Interleaved Reed-Solomon codes decoded collaboratively.

The rows share the evaluation locators, so column-aligned errors share one
error locator.  It is found by direct elimination on the stacked
erasure-adjusted syndrome recurrences of all rows, after which each row's
error values follow from Forney's formula.  Every candidate is re-encoded
and checked before it is returned.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintViolated, HeterogeneousLength, InvalidParams, LengthMismatch
from .galois import solve
from .reed_solomon import RSCode

# null spaces with more candidate locators than this are reported as failures
MAX_LOCATOR_CANDIDATES = 4096


@dataclass(frozen=True)
class IRSDecodeResult:
    rows: tuple[tuple[int, ...], ...]
    infos: tuple[tuple[int, ...], ...]
    error_columns: tuple[int, ...]
    n_erasures: int

    @property
    def n_errors(self) -> int:
        return len(self.error_columns)


class IRSCode:
    def __init__(self, rows):
        rows = list(rows)
        if not rows:
            raise InvalidParams("an IRS code needs at least one row")
        n, field = rows[0].n, rows[0].field
        if any(r.n != n for r in rows):
            raise HeterogeneousLength("all rows must have the same length")
        if any(r.field != field for r in rows):
            raise HeterogeneousLength("all rows must share one field")
        self.rows = tuple(rows)
        self.field = field
        self.n = n
        self.ell = len(rows)
        self.d_bar = Fraction(sum(r.d for r in rows), self.ell)
        self.lam = Fraction(self.ell + 1, self.ell)
        self.capacity = math.floor((self.d_bar - 1) * self.ell / (self.ell + 1))
        bad = [l for l, r in enumerate(rows) if r.d <= self.capacity]
        if bad:
            raise ConstraintViolated(
                f"rows {bad} have distance <= r({self.ell}) = {self.capacity}"
            )
        self.d_min = min(r.d for r in rows)

    def __repr__(self):
        return f"IRSCode({list(self.rows)})"

    def collaborative_radius(self, tau: int = 0) -> tuple[int, int]:
        """``(bd_radius, guaranteed_radius)`` for ``tau`` erased columns.

        The first is the largest error count meeting the bounded-distance
        condition with the average distance; the second is the per-row BMD
        radius of the weakest row, inside which decoding never fails.
        """
        bd = math.floor((self.d_bar - 1 - tau) / self.lam)
        guaranteed = (self.d_min - 1 - tau) // 2
        return bd, guaranteed

    def encode(self, infos) -> list[list[int]]:
        infos = list(infos)
        if len(infos) != self.ell:
            raise LengthMismatch(f"expected {self.ell} rows of information")
        return [code.encode(u) for code, u in zip(self.rows, infos)]

    def decode(self, matrix) -> IRSDecodeResult | None:
        """Collaborative decoding of an ``ell x n`` matrix.

        ``None`` entries mark erasures; a column erased in any row is erased
        in all.  Returns ``None`` on decoding failure.
        """
        matrix = [list(r) for r in matrix]
        if len(matrix) != self.ell or any(len(r) != self.n for r in matrix):
            raise LengthMismatch(f"expected a {self.ell} x {self.n} matrix")
        f = self.field
        erased = [j for j in range(self.n) if any(row[j] is None for row in matrix)]
        tau = len(erased)
        if tau > self.d_min - 1:
            return None
        erased_set = set(erased)
        filled = [[0 if j in erased_set else row[j] for j in range(self.n)] for row in matrix]
        synd = [code.syndromes(w) for code, w in zip(self.rows, filled)]

        gamma = [1]
        for j in erased:
            gamma = f.poly_mul(gamma, [1, f.alpha(j)])
        mod_synd = [
            f.poly_mul(gamma, s)[tau : code.d - 1] if s else []
            for code, s in zip(self.rows, synd)
        ]

        bd_radius, _ = self.collaborative_radius(tau)
        for eps in range(0, max(bd_radius, 0) + 1):
            found = {}
            for lam in self._locator_candidates(mod_synd, eps):
                result = self._complete(lam, eps, gamma, synd, filled, matrix, erased)
                if result is not None:
                    found[result.rows] = result
            if len(found) == 1:
                return next(iter(found.values()))
            if len(found) > 1:
                return None
        return None

    def _locator_candidates(self, mod_synd, eps):
        """Locators ``1 + L_1 x + ... + L_eps x^eps`` satisfying every row's recurrence."""
        f = self.field
        eqs, rhs = [], []
        for t in mod_synd:
            for i in range(eps, len(t)):
                eqs.append([t[i - s] for s in range(1, eps + 1)])
                rhs.append(t[i])
        if eps == 0:
            if not any(rhs):
                yield [1]
            return
        if not eqs:
            eqs, rhs = [[0] * eps], [0]
        sol = solve(f, eqs, rhs)
        if sol is None:
            return
        x, null = sol
        if f.size ** len(null) > MAX_LOCATOR_CANDIDATES:
            return
        for coeffs in itertools.product(range(f.size), repeat=len(null)):
            v = list(x)
            for c, basis in zip(coeffs, null):
                if c:
                    v = [a ^ f.mul(c, b) for a, b in zip(v, basis)]
            yield [1] + v

    def _complete(self, lam, eps, gamma, synd, filled, matrix, erased):
        f = self.field
        if lam[-1] == 0:
            return None
        erased_set = set(erased)
        err_cols = [
            j
            for j in range(self.n)
            if j not in erased_set and f.poly_eval(lam, f.alpha(-j)) == 0
        ]
        if len(err_cols) != eps:
            return None
        psi = f.poly_mul(lam, gamma)
        dpsi = [psi[i] if i % 2 == 1 else 0 for i in range(1, len(psi))]
        positions = err_cols + erased
        rows = []
        for code, s, w in zip(self.rows, synd, filled):
            if len(positions) > code.d - 1:
                return None
            corrected = list(w)
            if any(s):
                omega = f.poly_mul(s, psi)[: code.d - 1]
                for j in positions:
                    xinv = f.alpha(-j)
                    den = f.poly_eval(dpsi, xinv)
                    if den == 0:
                        return None
                    corrected[j] ^= f.div(f.poly_eval(omega, xinv), den)
            if any(code.syndromes(corrected)):
                return None
            rows.append(tuple(corrected))
        changed = tuple(
            j
            for j in range(self.n)
            if j not in erased_set and any(r[j] != m[j] for r, m in zip(rows, matrix))
        )
        if self.lam * len(changed) + len(erased) > self.d_bar - 1:
            return None
        return IRSDecodeResult(
            rows=tuple(rows),
            infos=tuple(tuple(code.extract_info(r)) for code, r in zip(self.rows, rows)),
            error_columns=changed,
            n_erasures=len(erased),
        )

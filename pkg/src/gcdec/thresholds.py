"""Decoding thresholds and decoding bounds for multi-attempt outer decoding.

Two regimes: independent outer BMD decoding (success while
``2*eps + tau < d_o``) and collaborative decoding of ``ell`` interleaved rows
(success while ``lam*eps + tau <= d_o - 1`` with ``lam = (ell+1)/ell``).

Thresholds are computed exactly with :class:`fractions.Fraction`; for very
many thresholds a float path floors with a small guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Real

from .errors import InvalidParams, ParamsTooLarge

INDEPENDENT = "independent"
COLLABORATIVE = "collaborative"

FLOAT_GUARD = 1e-9
# beyond this many thresholds (lam-1)^z is evaluated in floating point
EXACT_Z_LIMIT = 256


def floor_threshold(t: Real) -> int:
    if isinstance(t, (int, Fraction)):
        return math.floor(t)
    return math.floor(t + FLOAT_GUARD)


@dataclass(frozen=True)
class ThresholdSet:
    values: tuple
    mode: str
    d_i: int
    ell: int | None = None

    @property
    def z(self) -> int:
        return len(self.values)

    @property
    def integer_parts(self) -> tuple[int, ...]:
        return tuple(floor_threshold(t) for t in self.values)

    @property
    def z_star(self) -> int:
        return actual_attempts(self)

    def ladder(self) -> tuple[int, ...]:
        """Distinct non-negative integer thresholds, ascending: the attempts to run."""
        return tuple(sorted({t for t in self.integer_parts if t >= 0}))


def _check_di(d_i):
    if not isinstance(d_i, int) or d_i < 2:
        raise InvalidParams(f"inner distance must be an integer >= 2, got {d_i!r}")


def _check_z(z):
    if not isinstance(z, int) or z < 1:
        raise InvalidParams(f"number of thresholds must be an integer >= 1, got {z!r}")


def _check_ell(ell):
    if not isinstance(ell, int) or ell < 2:
        raise InvalidParams(f"collaborative decoding needs ell >= 2, got {ell!r}")


# -- independent outer decoding ------------------------------------------


def thresholds_independent(d_i: int, z: int) -> ThresholdSet:
    """Optimal thresholds ``T_k = k (d_i + 1) / (2z + 1) - 1``, k = 1..z."""
    _check_di(d_i)
    _check_z(z)
    values = tuple(Fraction(k * (d_i + 1), 2 * z + 1) - 1 for k in range(1, z + 1))
    return ThresholdSet(values, INDEPENDENT, d_i)


def bound_independent(d_o: int, d_i: int, z: int) -> int:
    """Exclusive error bound ``d_o (floor(T_z) + 1)`` for the optimal thresholds."""
    tset = thresholds_independent(d_i, z)
    return d_o * (tset.integer_parts[-1] + 1)


def min_attempts_independent(d_i: int) -> tuple[float, int]:
    """``(z_min, z_star)`` needed to reach half the concatenated distance.

    For odd ``d_i`` the top threshold is only reached in the limit, so
    ``z_min`` is ``math.inf``.
    """
    _check_di(d_i)
    if d_i % 2 == 0:
        return d_i // 2, d_i // 2
    return math.inf, (d_i - 1) // 2


def independent_ladder(d_i: int) -> tuple[int, ...]:
    """Integer thresholds the classic decoder runs for inner distance ``d_i``.

    Even ``d_i``: the integer parts of the optimal set with ``d_i/2``
    thresholds, i.e. ``0..d_i/2 - 1``.  Odd ``d_i``: every non-negative integer
    part the optimal thresholds take as their number grows, ``0..(d_i-1)/2``.
    """
    _check_di(d_i)
    if d_i % 2 == 0:
        return thresholds_independent(d_i, d_i // 2).ladder()
    return tuple(range((d_i - 1) // 2 + 1))


# -- collaborative outer decoding ----------------------------------------


def _lam(ell: int) -> Fraction:
    return Fraction(ell + 1, ell)


def thresholds_collaborative(d_i: int, ell: int, z: int, exact: bool | None = None) -> ThresholdSet:
    """Optimal thresholds ``T_k = b - a (lam-1)^k`` for ``ell`` interleaved rows."""
    _check_di(d_i)
    _check_ell(ell)
    _check_z(z)
    if exact is None:
        exact = z <= EXACT_Z_LIMIT
    if exact:
        lam = _lam(ell)
        step = Fraction(1, ell)  # lam - 1
    else:
        lam = (ell + 1) / ell
        step = 1 / ell
    mu = step**z
    den = 2 - lam * mu
    b = (d_i - 1 + lam * mu) / den
    a = (d_i + 1) / den
    values = tuple(b - a * step**k for k in range(1, z + 1))
    return ThresholdSet(values, COLLABORATIVE, d_i, ell)


def bound_collaborative(d_o: int, tset: ThresholdSet) -> int:
    if tset.mode != COLLABORATIVE:
        raise InvalidParams("bound_collaborative needs a collaborative threshold set")
    return d_o * (tset.integer_parts[-1] + 1)


def limit_thresholds(d_i: int, ell: int, k_max: int) -> tuple[Fraction, ...]:
    """Thresholds of the infinite set, ``(d_i-1)/2 - (d_i+1) (lam-1)^k / 2``."""
    top = Fraction(d_i - 1, 2)
    return tuple(top - Fraction(d_i + 1, 2) * Fraction(1, ell) ** k for k in range(1, k_max + 1))


def k_min(d_i: int, ell: int) -> int:
    """Smallest ``k`` with ``ell^k >= (d_i + 1)/2``, i.e. ``ceil(log_ell((d_i+1)/2))``."""
    k = 0
    while 2 * ell**k < d_i + 1:
        k += 1
    return k


def maximal_threshold_set(d_i: int, ell: int) -> ThresholdSet:
    """Smallest threshold set whose top integer part reaches the largest possible one."""
    _check_di(d_i)
    _check_ell(ell)
    if d_i % 2 == 0:
        target = d_i // 2 - 1
        z = 1
        while True:
            tset = thresholds_collaborative(d_i, ell, z)
            if tset.integer_parts[-1] == target:
                return tset
            z += 1
    values = limit_thresholds(d_i, ell, k_min(d_i, ell)) + (Fraction(d_i - 1, 2),)
    return ThresholdSet(values, COLLABORATIVE, d_i, ell)


def actual_attempts(tset: ThresholdSet) -> int:
    """Number of distinct integer parts, i.e. decoding attempts actually run."""
    return len(set(tset.integer_parts))


# -- adversarial oracle --------------------------------------------------

ORACLE_MAX_DO = 12
ORACLE_MAX_DI = 12
ORACLE_MAX_Z = 4


def column_classes(d_i: int, lambda_num: int, lambda_den: int, thresholds) -> list[tuple[int, tuple]]:
    """Cheapest ways a single column can hurt the outer decoder.

    Each class is ``(channel errors, weights)`` with one weight per attempt:
    ``lambda_num`` for a symbol error, ``lambda_den`` for an erasure, 0 for a
    correct symbol.
    """
    radius = (d_i - 1) // 2
    classes = []
    # decoded correctly at distance c, erased while T < c
    for c in range(1, radius + 1):
        classes.append((c, tuple(lambda_den if c > t else 0 for t in thresholds)))
    # inner decoding failure: erased in every attempt
    classes.append((radius + 1, tuple(lambda_den for _ in thresholds)))
    # miscorrection landing at distance delta from the received column
    for delta in range(0, radius + 1):
        classes.append(
            (d_i - delta, tuple(lambda_num if delta <= t else lambda_den for t in thresholds))
        )
    return classes


def adversarial_efail_oracle(d_o: int, d_i: int, lambda_num: int, lambda_den: int, thresholds) -> int:
    """Fewest channel errors that make every attempt fail.

    Attempt ``k`` fails when ``lam*eps + tau > d_o - 1`` with
    ``lam = lambda_num/lambda_den``.  The minimum over column-class counts is
    found exactly by memoised search over the remaining per-attempt deficits.
    """
    thresholds = tuple(int(t) for t in thresholds)
    if d_o > ORACLE_MAX_DO or d_i > ORACLE_MAX_DI or len(thresholds) > ORACLE_MAX_Z:
        raise ParamsTooLarge(
            f"oracle limited to d_o<={ORACLE_MAX_DO}, d_i<={ORACLE_MAX_DI}, z<={ORACLE_MAX_Z}"
        )
    if d_o < 1 or d_i < 2 or not thresholds or lambda_den < 1 or lambda_num < lambda_den:
        raise InvalidParams("invalid oracle parameters")
    classes = column_classes(d_i, lambda_num, lambda_den, thresholds)
    need0 = lambda_den * (d_o - 1) + 1

    @lru_cache(maxsize=None)
    def best(need: tuple) -> int:
        if all(x <= 0 for x in need):
            return 0
        out = math.inf
        for cost, weights in classes:
            if not any(w and x > 0 for w, x in zip(weights, need)):
                continue
            rest = tuple(max(0, x - w) for x, w in zip(need, weights))
            out = min(out, cost + best(rest))
        return out

    # a negative threshold erases every column, so that attempt fails for free
    return best(tuple(need0 if t >= 0 else 0 for t in thresholds))

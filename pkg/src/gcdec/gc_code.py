"""Generalized concatenated codes: encoding, classic BZDA, IRS-grouped BZDA.

A GC code stacks ``ell`` outer RS codewords as rows of a matrix ``A`` over
GF(2^m); column ``j`` of ``A`` (``ell*m`` bits, row ``l`` in bits
``[l*m, (l+1)*m)``) is inner-encoded into column ``j`` of the binary code
matrix.  Decoding proceeds level by level: inner coset decoding of every
column, then a ladder of outer decoding attempts with growing thresholds on
the inner decoding distance, and selection of the first candidate whose
distance metric certifies it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, InvalidParams, LengthMismatch
from .inner_code import InnerDecodeOutcome, NestedBinaryCode, pack_bits, unpack_bits
from .interleaved_rs import IRSCode
from .reed_solomon import RSCode
from .thresholds import independent_ladder, maximal_threshold_set

OK = "ok"
DEGRADED = "degraded"  # no candidate certified; best metric used
FAILED = "failed"  # no outer attempt produced a candidate


class GCCode:
    def __init__(self, outer, inner: NestedBinaryCode):
        outer = list(outer)
        if not outer:
            raise DimensionMismatch("at least one outer code is required")
        if inner.ell != len(outer):
            raise DimensionMismatch(f"inner code has {inner.ell} levels, {len(outer)} outer codes")
        fld = outer[0].field
        if any(o.field != fld for o in outer):
            raise DimensionMismatch("outer codes must share one field")
        if inner.m != fld.m:
            raise DimensionMismatch(f"inner code uses m={inner.m}, field has m={fld.m}")
        n_o = outer[0].n
        if any(o.n != n_o for o in outer):
            raise DimensionMismatch("outer codes must have equal length")
        self.outer = tuple(outer)
        self.inner = inner
        self.field = fld
        self.ell = len(outer)
        self.m = fld.m
        self.n_o = n_o
        self.n_i = inner.n
        self.n = self.n_i * self.n_o
        self.k = self.m * sum(o.k for o in outer)
        self.designed_distance = min(
            o.d * di for o, di in zip(self.outer, inner.level_distances)
        )

    def __repr__(self):
        rows = ", ".join(f"({o.n},{o.k},{o.d})" for o in self.outer)
        return (
            f"GCCode(n={self.n}, k={self.k}, d>={self.designed_distance}; "
            f"outer [{rows}], inner ({self.n_i},{self.inner.k}) {self.inner.level_distances})"
        )

    # -- encoding -------------------------------------------------------

    def outer_encode(self, info) -> list[list[int]]:
        info = list(info)
        if len(info) != self.ell:
            raise LengthMismatch(f"expected {self.ell} information rows, got {len(info)}")
        return [code.encode(row) for code, row in zip(self.outer, info)]

    def column_info(self, a, j: int, start: int = 0, stop: int | None = None) -> int:
        stop = self.ell if stop is None else stop
        return sum(a[l][j] << ((l - start) * self.m) for l in range(start, stop))

    def inner_encode(self, a) -> np.ndarray:
        cols = [self.inner.encode_packed(self.column_info(a, j)) for j in range(self.n_o)]
        return unpack_bits(np.stack(cols), self.n_i).T.copy()

    def encode(self, info) -> np.ndarray:
        """Binary ``n_i x n_o`` code matrix for ``ell`` rows of outer information."""
        return self.inner_encode(self.outer_encode(info))

    def info_from_estimate(self, estimate) -> list[list[int]]:
        return [code.extract_info(row) for code, row in zip(self.outer, estimate)]

    # -- decoding -------------------------------------------------------

    def _check_received(self, received) -> np.ndarray:
        r = np.asarray(received, dtype=np.uint8)
        if r.shape != (self.n_i, self.n_o):
            raise LengthMismatch(f"expected a {self.n_i} x {self.n_o} matrix, got {r.shape}")
        return pack_bits(r.T)

    def _inner_pass(self, cols, level, estimate) -> list[InnerDecodeOutcome]:
        return [
            self.inner.decode_packed(cols[j], level, self.column_info(estimate, j, 0, level))
            for j in range(self.n_o)
        ]

    def decode_classic(self, received) -> "DecodeReport":
        """Classic multi-attempt decoding, one iteration per outer row."""
        return self.decode_irs(received, GroupPlan.singletons(self))

    def decode_irs(self, received, plan: "GroupPlan | None" = None) -> "DecodeReport":
        """Decoding with groups of outer rows decoded as interleaved RS codes.

        Each group costs one inner decoding pass at its first level; singleton
        groups run the classic row iteration.
        """
        if plan is None:
            plan = plan_groups(self)
        plan.validate(self)
        cols = self._check_received(received)
        estimate = [[0] * self.n_o for _ in range(self.ell)]
        report = DecodeReport(estimate=estimate)
        for group in plan.groups:
            outcomes = self._inner_pass(cols, group.start, estimate)
            report.inner_decodings += self.n_o
            report.inner_skipped += self.n_o * (group.size - 1)
            if group.size == 1:
                log, rows = self._row_iteration(group, outcomes)
            else:
                log, rows = self._group_iteration(group, outcomes)
            log.inner_failures = sum(not o.decoded for o in outcomes)
            for l, row in zip(group.rows, rows):
                estimate[l] = list(row)
            report.iterations.append(log)
            report.outer_attempts += len(log.attempts)
        report.info = self.info_from_estimate(estimate)
        return report

    def _row_iteration(self, group, outcomes):
        level = group.start
        code = self.outer[level]
        d_i = self.inner.level_distances[level]
        log = IterationLog(rows=group.rows, level=level, ladder=group.ladder)
        limit = code.d * d_i  # certify while 2t < d_o d_i
        candidates = []
        for t in group.ladder:
            word = [
                o.info_symbol if o.decoded and o.delta <= t else None for o in outcomes
            ]
            res = code.decode(word)
            if res is None:
                log.attempts.append(AttemptLog(t, word.count(None), None, None, False))
                continue
            twice = selection_metric(res.codeword, outcomes, d_i, lambda o: o.info_symbol)
            accepted = twice < limit
            log.attempts.append(
                AttemptLog(t, res.n_erasures, res.n_errors, Fraction(twice, 2), accepted)
            )
            if accepted:
                log.status = OK
                return log, [res.codeword]
            candidates.append((twice, res.codeword))
        if candidates:
            log.status = DEGRADED
            return log, [min(candidates, key=lambda c: c[0])[1]]
        log.status = FAILED
        return log, [[o.info_symbol if o.decoded else 0 for o in outcomes]]

    def _group_iteration(self, group, outcomes):
        v, size = group.start, group.size
        irs = IRSCode(self.outer[v : v + size])
        d_i = self.inner.level_distances[v]
        mask = (1 << self.m) - 1
        log = IterationLog(rows=group.rows, level=v, ladder=group.ladder)
        limit = irs.d_min * d_i

        def chunks(o):
            return tuple((o.info >> (i * self.m)) & mask for i in range(size))

        decoded = [chunks(o) if o.decoded else None for o in outcomes]
        candidates = []
        for t in group.ladder + group.fallback:
            keep = [o.decoded and o.delta <= t for o in outcomes]
            matrix = [
                [decoded[j][i] if keep[j] else None for j in range(self.n_o)] for i in range(size)
            ]
            res = irs.decode(matrix)
            if res is None:
                log.attempts.append(AttemptLog(t, keep.count(False), None, None, False))
                continue
            cand_cols = list(zip(*res.rows))
            twice = selection_metric(cand_cols, outcomes, d_i, chunks)
            accepted = twice < limit
            log.attempts.append(
                AttemptLog(t, res.n_erasures, res.n_errors, Fraction(twice, 2), accepted)
            )
            if accepted:
                log.status = OK
                return log, res.rows
            candidates.append((twice, res.rows))
        if candidates:
            log.status = DEGRADED
            return log, min(candidates, key=lambda c: c[0])[1]
        log.status = FAILED
        raw = [[decoded[j][i] if decoded[j] else 0 for j in range(self.n_o)] for i in range(size)]
        return log, raw


def selection_metric(candidate, outcomes, d_i, symbol_of) -> int:
    """Twice the distance metric ``t`` of an outer candidate.

    Per column: the inner decoding distance if the candidate agrees with the
    inner decoder, ``d_i`` minus it if not, ``d_i/2`` on inner failure.
    Doubled so that odd ``d_i`` stays integral.
    """
    total = 0
    for sym, o in zip(candidate, outcomes):
        if not o.decoded:
            total += d_i
        elif sym == symbol_of(o):
            total += 2 * o.delta
        else:
            total += 2 * (d_i - o.delta)
    return total


def select_candidate(candidates, outcomes, d_o: int, d_i: int, symbol_of=None):
    """First ``(k, codeword)`` with metric below ``d_o d_i / 2``, else ``None``."""
    symbol_of = symbol_of or (lambda o: o.info_symbol)
    for k, cw in candidates:
        if selection_metric(cw, outcomes, d_i, symbol_of) < d_o * d_i:
            return k, cw
    return None


def attempt_word(outcomes, threshold) -> list:
    """Outer word for one attempt: inner symbol if its distance is within ``threshold``."""
    return [o.info_symbol if o.decoded and o.delta <= threshold else None for o in outcomes]


# -- reports --------------------------------------------------------------


@dataclass
class AttemptLog:
    threshold: int
    erasures: int
    errors: int | None  # symbol errors corrected; None when outer decoding failed
    metric: Fraction | None
    accepted: bool

    @property
    def decoded(self) -> bool:
        return self.errors is not None


@dataclass
class IterationLog:
    rows: tuple[int, ...]
    level: int
    ladder: tuple[int, ...]
    attempts: list[AttemptLog] = field(default_factory=list)
    status: str = FAILED
    inner_failures: int = 0


@dataclass
class DecodeReport:
    estimate: list[list[int]]
    info: list[list[int]] = field(default_factory=list)
    iterations: list[IterationLog] = field(default_factory=list)
    inner_decodings: int = 0
    inner_skipped: int = 0
    outer_attempts: int = 0

    @property
    def ok(self) -> bool:
        return all(it.status == OK for it in self.iterations)

    @property
    def failures(self) -> list[IterationLog]:
        return [it for it in self.iterations if it.status != OK]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "inner_decodings": self.inner_decodings,
            "inner_skipped": self.inner_skipped,
            "outer_attempts": self.outer_attempts,
            "iterations": [
                {
                    "rows": list(it.rows),
                    "level": it.level,
                    "ladder": list(it.ladder),
                    "status": it.status,
                    "inner_failures": it.inner_failures,
                    "attempts": [
                        {
                            "threshold": a.threshold,
                            "erasures": a.erasures,
                            "errors": a.errors,
                            "metric": None if a.metric is None else float(a.metric),
                            "accepted": a.accepted,
                        }
                        for a in it.attempts
                    ],
                }
                for it in self.iterations
            ],
        }


# -- grouping -------------------------------------------------------------


@dataclass(frozen=True)
class Group:
    start: int
    size: int
    d_bar: Fraction
    d_i: int
    ladder: tuple[int, ...]
    # integer thresholds missing from the ladder, tried only after it fails
    fallback: tuple[int, ...] = ()

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.start + self.size))


@dataclass(frozen=True)
class GroupPlan:
    groups: tuple[Group, ...]

    @classmethod
    def singletons(cls, gc: GCCode) -> "GroupPlan":
        return cls(tuple(_make_group(gc, l, 1) for l in range(gc.ell)))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(g.size for g in self.groups)

    def validate(self, gc: GCCode) -> None:
        nxt = 0
        for g in self.groups:
            if g.start != nxt or g.size < 1:
                raise InvalidParams("groups must partition the rows into consecutive runs")
            nxt += g.size
        if nxt != gc.ell:
            raise InvalidParams("groups do not cover every row")


def _make_group(gc: GCCode, start: int, size: int) -> Group:
    d_i = gc.inner.level_distances[start]
    rows = gc.outer[start : start + size]
    d_bar = Fraction(sum(r.d for r in rows), size)
    if size == 1:
        return Group(start, size, d_bar, d_i, independent_ladder(d_i))
    ladder = maximal_threshold_set(d_i, size).ladder()
    fallback = tuple(t for t in independent_ladder(d_i) if t not in ladder)
    return Group(start, size, d_bar, d_i, ladder, fallback)


def groupable(gc: GCCode, start: int, size: int, strict: bool = False) -> bool:
    """Whether rows ``start..start+size-1`` may be decoded as one IRS code.

    Every row must exceed the IRS correction capacity, and the group's
    half-distance bound ``d_bar * d_i`` must cover the designed distance.
    ``strict`` additionally scales the bound by ``size/(size+1)``.
    """
    if size < 2:
        return True
    if start + size > gc.ell:
        return False
    rows = gc.outer[start : start + size]
    d_bar = Fraction(sum(r.d for r in rows), size)
    capacity = math.floor((d_bar - 1) * size / (size + 1))
    if any(r.d <= capacity for r in rows):
        return False
    reach = d_bar * gc.inner.level_distances[start]
    if strict:
        reach = reach * size / (size + 1)
    return reach >= gc.designed_distance


def plan_groups(gc: GCCode, strict: bool = False) -> GroupPlan:
    """Greedy left-to-right grouping into maximal consecutive runs."""
    groups = []
    v = 0
    while v < gc.ell:
        size = 1
        while groupable(gc, v, size + 1, strict):
            size += 1
        groups.append(_make_group(gc, v, size))
        v += size
    return GroupPlan(tuple(groups))

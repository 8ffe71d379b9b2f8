"""Seeded binary error injection and Monte Carlo decoding campaigns.

Randomness comes from numpy's counter-based Philox generator.  Per-trial
streams are derived from ``SeedSequence(seed, spawn_key=(trial,))``, so any
trial can be replayed on its own.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, WeightOutOfRange

UNIFORM = "uniform"
COLUMN_CAPPED = "column-capped"


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=stream)))


@dataclass(frozen=True)
class ErrorSpec:
    weight: int
    seed: int
    placement: str = UNIFORM
    column_cap: int | None = None


def error_pattern(shape, spec: ErrorSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    n_i, n_o = shape
    total = n_i * n_o
    if not 0 <= spec.weight <= total:
        raise WeightOutOfRange(f"weight {spec.weight} outside [0, {total}]")
    rng = rng if rng is not None else make_rng(spec.seed)
    e = np.zeros(total, dtype=np.uint8)
    if spec.placement == UNIFORM:
        e[rng.choice(total, size=spec.weight, replace=False)] = 1
        return e.reshape(n_i, n_o)
    if spec.placement != COLUMN_CAPPED:
        raise InvalidParams(f"unknown placement {spec.placement!r}")
    cap = spec.column_cap if spec.column_cap is not None else n_i
    if not 0 <= cap <= n_i:
        raise InvalidParams(f"column cap {cap} outside [0, {n_i}]")
    if spec.weight > cap * n_o:
        raise WeightOutOfRange(f"weight {spec.weight} exceeds cap {cap} x {n_o} columns")
    e = e.reshape(n_i, n_o)
    per_col = np.zeros(n_o, dtype=int)
    for _ in range(spec.weight):
        col = rng.choice(np.flatnonzero(per_col < cap))
        row = rng.choice(np.flatnonzero(e[:, col] == 0))
        e[row, col] = 1
        per_col[col] += 1
    return e


def inject_errors(code_matrix, spec: ErrorSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    """Received matrix ``C + E`` with exactly ``spec.weight`` flipped bits."""
    c = np.asarray(code_matrix, dtype=np.uint8)
    return c ^ error_pattern(c.shape, spec, rng)


@dataclass
class CampaignStats:
    trials: int = 0
    successes: int = 0
    flagged: int = 0  # wrong estimate, report admits a failure
    silent: int = 0  # wrong estimate, report claims success
    inner_decodings: int = 0
    outer_attempts: int = 0

    @property
    def mean_inner_decodings(self) -> float:
        return self.inner_decodings / self.trials if self.trials else 0.0

    @property
    def mean_outer_attempts(self) -> float:
        return self.outer_attempts / self.trials if self.trials else 0.0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def add(self, correct: bool, report) -> None:
        self.trials += 1
        if correct:
            self.successes += 1
        elif report.ok:
            self.silent += 1
        else:
            self.flagged += 1
        self.inner_decodings += report.inner_decodings
        self.outer_attempts += report.outer_attempts

    def as_row(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "flagged": self.flagged,
            "silent": self.silent,
            "mean_inner_decodings": f"{self.mean_inner_decodings:.6f}",
            "mean_outer_attempts": f"{self.mean_outer_attempts:.6f}",
        }


def random_info(gc, rng: np.random.Generator) -> list[list[int]]:
    return [rng.integers(0, gc.field.size, size=o.k).tolist() for o in gc.outer]


def run_trial(gc, decoder: str, weight: int, seed: int, trial: int, plan=None, placement=UNIFORM, column_cap=None):
    """One trial: returns ``(transmitted A, report)``."""
    rng = make_rng(seed, trial)
    info = random_info(gc, rng)
    a = gc.outer_encode(info)
    c = gc.inner_encode(a)
    r = inject_errors(c, ErrorSpec(weight, seed, placement, column_cap), rng)
    if decoder == "classic":
        report = gc.decode_classic(r)
    elif decoder == "irs":
        report = gc.decode_irs(r, plan)
    else:
        raise InvalidParams(f"unknown decoder {decoder!r}")
    return a, report


def monte_carlo_run(gc, decoder: str, weight: int, trials: int, seed: int, plan=None, placement=UNIFORM, column_cap=None) -> CampaignStats:
    if trials < 1:
        raise InvalidParams("trials must be >= 1")
    stats = CampaignStats()
    for trial in range(trials):
        a, report = run_trial(gc, decoder, weight, seed, trial, plan, placement, column_cap)
        correct = [list(r) for r in report.estimate] == [list(r) for r in a]
        stats.add(correct, report)
    return stats

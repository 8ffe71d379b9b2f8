"""Plain-text file formats: matrices, information rows and code configs.

Matrix file: header ``nI nO`` then ``nI`` lines of ``nO`` characters '0'/'1'.
Info file: one line per outer row, whitespace-separated hex symbols.
Config file: flat ``key = value`` lines; ``outer = n,k`` repeats per level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigError, GCDecError
from .galois import Field
from .gc_code import GCCode, GroupPlan, plan_groups
from .inner_code import NestedBinaryCode
from .reed_solomon import RSCode

GROUPING_MODES = ("classic", "irs", "auto")


def write_matrix(path, matrix) -> None:
    m = np.asarray(matrix, dtype=np.uint8)
    lines = [f"{m.shape[0]} {m.shape[1]}"] + ["".join(map(str, row)) for row in m]
    _write(path, "\n".join(lines) + "\n")


def read_matrix(path) -> np.ndarray:
    text = Path(path).read_text().split()
    if len(text) < 2:
        raise ConfigError(f"{path}: missing 'nI nO' header")
    try:
        n_i, n_o = int(text[0]), int(text[1])
    except ValueError:
        raise ConfigError(f"{path}: malformed header") from None
    rows = text[2:]
    if len(rows) != n_i or any(len(r) != n_o or set(r) - {"0", "1"} for r in rows):
        raise ConfigError(f"{path}: expected {n_i} rows of {n_o} '0'/'1' characters")
    return np.array([[int(c) for c in r] for r in rows], dtype=np.uint8)


def write_info(path, info, m: int) -> None:
    width = (m + 3) // 4
    lines = [" ".join(f"{s:0{width}x}" for s in row) for row in info]
    _write(path, "\n".join(lines) + "\n")


def read_info(path) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok, 16) for tok in line.split()])
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: expected hex symbols") from None
    return rows


def _write(path, text: str) -> None:
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)


@dataclass
class CodeConfig:
    m: int
    modulus: int | None
    outer: list[tuple[int, int]]
    inner_path: Path
    inner_distances: list[int] | None = None
    verify_inner: bool = True
    grouping: str = "auto"
    seed: int | None = None
    trials: int | None = None
    errors: int | None = None
    extra: dict = field(default_factory=dict)

    def build(self) -> tuple[GCCode, GroupPlan]:
        try:
            fld = Field(self.m, self.modulus)
            outer = [RSCode(fld, n, k) for n, k in self.outer]
            inner = NestedBinaryCode.from_file(
                self.inner_path,
                len(self.outer),
                self.m,
                claimed_distances=self.inner_distances,
                verify=self.verify_inner,
            )
            gc = GCCode(outer, inner)
        except (GCDecError, OSError) as exc:
            raise ConfigError(str(exc)) from exc
        return gc, self.plan(gc)

    def plan(self, gc: GCCode, mode: str | None = None) -> GroupPlan:
        mode = mode or self.grouping
        if mode == "classic":
            return GroupPlan.singletons(gc)
        plan = plan_groups(gc)
        if mode == "irs" and max(plan.sizes) < 2:
            raise ConfigError("grouping = irs but no rows satisfy the grouping constraints")
        return plan


def _int(value: str) -> int:
    return int(value, 0)


def _bool(value: str) -> bool:
    v = value.lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def read_config(path) -> CodeConfig:
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    values: dict[str, str] = {}
    outer = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key == "outer":
                n, k = (int(x) for x in value.split(","))
                outer.append((n, k))
            else:
                values[key] = value
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}") from None
    try:
        m = _int(values.pop("m"))
        inner = values.pop("inner")
    except KeyError as exc:
        raise ConfigError(f"{path}: missing required key {exc.args[0]!r}") from None
    if not outer:
        raise ConfigError(f"{path}: no 'outer = n,k' lines")
    inner_path = Path(inner)
    if not inner_path.is_absolute():
        inner_path = path.parent / inner_path
    if not inner_path.exists():
        raise ConfigError(f"{path}: inner generator file {inner_path} not found")
    try:
        cfg = CodeConfig(
            m=m,
            modulus=_int(values.pop("modulus")) if "modulus" in values else None,
            outer=outer,
            inner_path=inner_path,
            inner_distances=(
                [int(x) for x in values.pop("inner_distances").split(",")]
                if "inner_distances" in values
                else None
            ),
            verify_inner=_bool(values.pop("verify_inner", "true")),
            grouping=values.pop("grouping", "auto"),
            seed=_int(values.pop("seed")) if "seed" in values else None,
            trials=_int(values.pop("trials")) if "trials" in values else None,
            errors=_int(values.pop("errors")) if "errors" in values else None,
        )
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if cfg.grouping not in GROUPING_MODES:
        raise ConfigError(f"{path}: grouping must be one of {GROUPING_MODES}")
    cfg.extra = values
    return cfg

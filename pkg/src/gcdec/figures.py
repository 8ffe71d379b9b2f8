"""Tabulated threshold data behind the bound-vs-thresholds and attempts plots."""

from __future__ import annotations

import csv
import io

from .errors import InvalidRange
from .thresholds import (
    actual_attempts,
    bound_collaborative,
    bound_independent,
    maximal_threshold_set,
    min_attempts_independent,
    thresholds_collaborative,
)


def bounds_table(d_o: int, d_i: int, ell: int, z_min: int, z_max: int) -> list[dict]:
    """Decoding bounds versus number of thresholds, both regimes."""
    if not 1 <= z_min <= z_max:
        raise InvalidRange(f"bad threshold range [{z_min}, {z_max}]")
    if d_o < 1 or d_i < 2 or ell < 2:
        raise InvalidRange("need d_o >= 1, d_i >= 2, ell >= 2")
    return [
        {
            "z": z,
            "bound_independent": bound_independent(d_o, d_i, z),
            "bound_collaborative": bound_collaborative(d_o, thresholds_collaborative(d_i, ell, z)),
        }
        for z in range(z_min, z_max + 1)
    ]


def attempts_table(d_i_min: int, d_i_max: int, ells=(2, 8)) -> list[dict]:
    """Actual attempts needed for half-distance decoding, odd inner distances."""
    if d_i_min < 3 or d_i_min > d_i_max:
        raise InvalidRange(f"bad inner distance range [{d_i_min}, {d_i_max}]")
    ells = tuple(ells)
    if not ells or any(ell < 2 for ell in ells):
        raise InvalidRange("interleaving orders must be >= 2")
    rows = []
    for d_i in range(d_i_min | 1, d_i_max + 1, 2):
        row = {"d_i": d_i, "zstar_independent": min_attempts_independent(d_i)[1]}
        for ell in ells:
            row[f"zstar_l{ell}"] = actual_attempts(maximal_threshold_set(d_i, ell))
        rows.append(row)
    return rows


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()

"""``gcdec`` command-line front end.

Exit status: 0 on success, 1 when a decode reports failures, 2 on bad
configuration, input files or parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import channel, figures, fileio
from .errors import ConfigError, GCDecError
from .gc_code import GroupPlan, plan_groups

EXIT_OK, EXIT_DECODE_FAILURE, EXIT_CONFIG = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _plan(cfg, gc, mode: str) -> GroupPlan:
    if mode == "classic":
        return GroupPlan.singletons(gc)
    if mode == "irs":
        return plan_groups(gc)
    return cfg.plan(gc)


def _describe_plan(plan: GroupPlan) -> str:
    parts = []
    for g in plan.groups:
        rows = ",".join(map(str, g.rows))
        parts.append(f"{{{rows}}}")
    return "[" + ", ".join(parts) + "]"


def cmd_build(args) -> int:
    cfg = fileio.read_config(args.config)
    gc, plan = cfg.build()
    print(f"n = {gc.n}")
    print(f"k = {gc.k}")
    print(f"inner_distances = {','.join(map(str, gc.inner.level_distances))}")
    print(f"outer_distances = {','.join(str(o.d) for o in gc.outer)}")
    print(f"designed_distance = {gc.designed_distance}")
    print(f"plan = {_describe_plan(plan)}")
    for g in plan.groups:
        extra = f" fallback={list(g.fallback)}" if g.fallback else ""
        print(f"  rows {list(g.rows)}: d_i={g.d_i} thresholds={list(g.ladder)}{extra}")
    return EXIT_OK


def cmd_encode(args) -> int:
    cfg = fileio.read_config(args.config)
    gc, _ = cfg.build()
    info = fileio.read_info(args.info)
    try:
        matrix = gc.encode(info)
    except GCDecError as exc:
        raise ConfigError(f"{args.info}: {exc}") from exc
    fileio.write_matrix(args.out, matrix)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    matrix = fileio.read_matrix(args.matrix)
    spec = channel.ErrorSpec(args.errors, args.seed, args.placement, args.column_cap)
    fileio.write_matrix(args.out, channel.inject_errors(matrix, spec))
    return EXIT_OK


def cmd_decode(args) -> int:
    cfg = fileio.read_config(args.config)
    gc, _ = cfg.build()
    received = fileio.read_matrix(args.matrix)
    if received.shape != (gc.inner.n, gc.n_o):
        raise ConfigError(
            f"{args.matrix}: shape {received.shape}, code needs {(gc.inner.n, gc.n_o)}"
        )
    report = gc.decode_irs(received, _plan(cfg, gc, args.mode))
    fileio.write_info(args.out, report.info, gc.m)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    status = "ok" if report.ok else "failed"
    print(
        f"status={status} outer_attempts={report.outer_attempts} "
        f"inner_decodings={report.inner_decodings} inner_skipped={report.inner_skipped}",
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_DECODE_FAILURE


def _emit_csv(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def cmd_sweep_bounds(args) -> int:
    rows = figures.bounds_table(args.d_o, args.d_i, args.ell, args.z_min, args.z_max)
    _emit_csv(args.out, figures.to_csv(rows))
    return EXIT_OK


def cmd_attempts_table(args) -> int:
    rows = figures.attempts_table(args.d_i_min, args.d_i_max, args.ells)
    _emit_csv(args.out, figures.to_csv(rows))
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = fileio.read_config(args.config)
    gc, _ = cfg.build()
    seed = args.seed if args.seed is not None else cfg.seed
    if seed is None:
        raise ConfigError("simulate needs --seed (or a 'seed' key in the config)")
    weights = args.errors if args.errors is not None else ([cfg.errors] if cfg.errors is not None else None)
    trials = args.trials if args.trials is not None else cfg.trials
    if not weights or trials is None:
        raise ConfigError("simulate needs error weights and a trial count")
    plan = _plan(cfg, gc, args.mode)
    decoder = "classic" if all(s == 1 for s in plan.sizes) else "irs"
    buf = io.StringIO()
    writer = None
    for w in weights:
        stats = channel.monte_carlo_run(
            gc, decoder, w, trials, seed, plan, args.placement, args.column_cap
        )
        row = {"errors": w, "mode": args.mode, **stats.as_row()}
        if writer is None:
            writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
            writer.writeheader()
        writer.writerow(row)
    _emit_csv(args.out, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gcdec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", help="validate a code config and print its parameters")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("encode", help="encode an info file into a code matrix")
    s.add_argument("--config", required=True)
    s.add_argument("--info", required=True)
    s.add_argument("--out", help="matrix file (default: stdout)")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("corrupt", help="flip a fixed number of bits of a matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--errors", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--placement", choices=[channel.UNIFORM, channel.COLUMN_CAPPED], default=channel.UNIFORM)
    s.add_argument("--column-cap", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_corrupt)

    s = sub.add_parser("decode", help="decode a received matrix")
    s.add_argument("--config", required=True)
    s.add_argument("--matrix", required=True)
    s.add_argument("--mode", choices=["classic", "irs", "auto"], default="auto")
    s.add_argument("--out", help="estimated info file (default: stdout)")
    s.add_argument("--report", help="write the decode report as JSON")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("sweep-bounds", help="CSV of decoding bounds versus threshold count")
    s.add_argument("--d-o", type=int, required=True)
    s.add_argument("--d-i", type=int, required=True)
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--z-min", type=int, default=1)
    s.add_argument("--z-max", type=int, default=25)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep_bounds)

    s = sub.add_parser("attempts-table", help="CSV of required attempts for odd inner distances")
    s.add_argument("--d-i-min", type=int, default=3)
    s.add_argument("--d-i-max", type=int, default=100)
    s.add_argument("--ells", type=_int_list, default=[2, 8])
    s.add_argument("--out")
    s.set_defaults(func=cmd_attempts_table)

    s = sub.add_parser("simulate", help="Monte Carlo decoding campaign, CSV output")
    s.add_argument("--config", required=True)
    s.add_argument("--mode", choices=["classic", "irs", "auto"], default="auto")
    s.add_argument("--errors", type=_int_list, help="comma-separated error weights")
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--placement", choices=[channel.UNIFORM, channel.COLUMN_CAPPED], default=channel.UNIFORM)
    s.add_argument("--column-cap", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GCDecError, OSError) as exc:
        print(f"gcdec: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

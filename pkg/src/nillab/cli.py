"""Command-line front end.

Subcommands: ``run`` (one seeded experiment), ``table`` (sweep with a
stability column), ``witt`` (free Lie algebra dimensions), ``check-paper``
(replay the published reference experiments against the built-in expected
table).  Exit codes: 0 success / all cells match, 1 check mismatch,
2 usage error.
"""

import argparse
import json
import sys

from nillab import golden
from nillab.experiments import (
    ExperimentConfig,
    check_reference_table,
    rigidity_obstruction,
    run_experiment,
)
from nillab.rng import trial_seed
from nillab.witt import free_nilpotent_dim, witt_dims

_SAFE_M_MAX = 10
_HARD_M_MAX = 12


def _u64(text):
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _emit_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _check_order(parser, m, allow_large):
    cap = _HARD_M_MAX if allow_large else _SAFE_M_MAX
    if not 2 <= m <= cap:
        parser.error(
            f"matrix order must be in 2..{cap}"
            + ("" if allow_large else " (use --allow-large-m for 11, 12)")
        )
    if m > _SAFE_M_MAX:
        print(
            f"warning: order {m} runs for a long time and has no pinned "
            "reference values",
            file=sys.stderr,
        )


def _matrix_lines(name, mat):
    return [f"  {name}[{i}] = {list(row)}" for i, row in enumerate(mat.data)]


def _dims_text(dims):
    return ", ".join(str(d) for d in dims)


def _report_text(report):
    cfg = report.config
    lines = [
        f"experiment: m={cfg.m} gens={cfg.generator_count} seed={cfg.seed} "
        f"bound={cfg.entry_bound} generic={'yes' if cfg.require_generic else 'no'}",
    ]
    names = ("X", "Y", "Z")
    for name, mat in zip(names, report.generators):
        lines.extend(_matrix_lines(name, mat))
    nil = "nilpotent" if report.der_nilpotent else "non-nilpotent"
    comm_nil = "nilpotent" if report.commutant_der_nilpotent else "non-nilpotent"
    ideal_nil = "nilpotent" if report.codim1_der_nilpotent else "non-nilpotent"
    lines += [
        f"dim                  {report.dim}",
        f"nilpotency class     {report.nil_class}",
        f"lower central dims   {_dims_text(report.lower_dims)}",
        f"upper central dims   {_dims_text(report.upper_dims)}",
        f"derived dims         {_dims_text(report.derived_dims)}",
        f"center dim           {report.center_dim}",
        f"generators           {report.generators_count}",
        f"derivations          dim {report.der_dim}, {nil}",
        f"commutant            dim {report.commutant_dim}, "
        f"derivations dim {report.commutant_der_dim}, {comm_nil}",
        f"codim-1 ideal        coefficients {list(report.codim1_coefficients)}, "
        f"derivations dim {report.codim1_der_dim}, {ideal_nil}",
        f"formula dim          {report.formula_dim} "
        f"({'match' if report.formula_match else 'mismatch'})",
        f"rigidity             {rigidity_obstruction(report)}",
        f"fingerprint          {report.fingerprint}",
    ]
    return "\n".join(lines)


def _cmd_run(parser, args):
    _check_order(parser, args.m, args.allow_large_m)
    cfg = ExperimentConfig(
        m=args.m,
        generator_count=args.gens,
        seed=args.seed,
        entry_bound=args.bound,
        require_generic=not args.no_generic,
    )
    report = run_experiment(cfg)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(_report_text(report))
    return 0


def _cmd_table(parser, args):
    if args.m_min > args.m_max:
        parser.error("--m-min must not exceed --m-max")
    _check_order(parser, args.m_min, args.allow_large_m)
    _check_order(parser, args.m_max, args.allow_large_m)
    rows = []
    stability = {}
    for m in range(args.m_min, args.m_max + 1):
        prints = []
        for trial in range(args.trials):
            seed = trial_seed(args.seed, trial)
            cfg = ExperimentConfig(
                m=m,
                seed=seed,
                entry_bound=args.bound,
                require_generic=not args.no_generic,
            )
            report = run_experiment(cfg)
            prints.append(report.fingerprint)
            rows.append(
                {
                    "m": m,
                    "trial": trial,
                    "seed": seed,
                    "dim": report.dim,
                    "class": report.nil_class,
                    "lower_dims": list(report.lower_dims),
                    "der_dim": report.der_dim,
                    "der_nilpotent": report.der_nilpotent,
                    "fingerprint": report.fingerprint,
                }
            )
        stability[str(m)] = len(set(prints)) == 1
    if args.format == "json":
        _emit_json(
            {
                "schema_version": 1,
                "command": "table",
                "rows": rows,
                "stability": stability,
            }
        )
    else:
        print("m  trial  dim  class  lower dims          der  der-nilp  stable")
        for row in rows:
            nonzero = [d for d in row["lower_dims"] if d != 0]
            print(
                f"{row['m']:<2} {row['trial']:<6} {row['dim']:<4} {row['class']:<6} "
                f"{','.join(map(str, nonzero)):<19} {row['der_dim']:<4} "
                f"{'yes' if row['der_nilpotent'] else 'no':<9} "
                f"{'yes' if stability[str(row['m'])] else 'NO'}"
            )
    return 0


def _cmd_witt(parser, args):
    dims = witt_dims(args.gens, args.max_degree)
    cumulative = [free_nilpotent_dim(args.gens, d) for d in range(1, args.max_degree + 1)]
    if args.format == "json":
        _emit_json(
            {
                "schema_version": 1,
                "command": "witt",
                "gens": args.gens,
                "degrees": list(range(1, args.max_degree + 1)),
                "dims": dims,
                "cumulative": cumulative,
            }
        )
    else:
        print("degree  dim  cumulative")
        for d, (w, c) in enumerate(zip(dims, cumulative), start=1):
            print(f"{d:<7} {w:<4} {c}")
    return 0


def _cmd_check(parser, args):
    m_values = (4, 5, 6, 7, 8, 9, 10) if args.include_slow else (4, 5, 6, 7, 8)
    seeds = [trial_seed(args.seed, i) for i in range(args.seeds)]
    result = check_reference_table(seeds, m_values=m_values)
    if args.format == "json":
        _emit_json(
            {
                "schema_version": 1,
                "command": "check-paper",
                "seeds": seeds,
                "cells": [
                    {
                        "m": c.m,
                        "gens": c.gens,
                        "seed": c.seed,
                        "field": c.field,
                        "expected": _jsonable(c.expected),
                        "actual": _jsonable(c.actual),
                        "ok": c.ok,
                    }
                    for c in result.cells
                ],
                "all_match": result.all_match,
                "expected_table": golden.as_dict(),
            }
        )
    else:
        by_run = {}
        for c in result.cells:
            by_run.setdefault((c.m, c.gens, c.seed), []).append(c)
        for (m, gens, seed), cells in by_run.items():
            bad = [c for c in cells if not c.ok]
            if bad:
                print(f"m={m} gens={gens} seed={seed}: MISMATCH")
                for c in bad:
                    print(f"  {c.field}: expected {c.expected}, got {c.actual}")
            else:
                print(f"m={m} gens={gens} seed={seed}: ok ({len(cells)} cells)")
        print("all cells match" if result.all_match else "MISMATCHES FOUND")
    return 0 if result.all_match else 1


def _jsonable(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--seed", type=_u64, default=0)
    sub.add_argument("--bound", type=_positive, default=10)
    sub.add_argument("--no-generic", action="store_true")
    sub.add_argument("--allow-large-m", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nillab",
        description="Exact experiments with generated subalgebras of "
        "strictly upper-triangular matrices.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_run = subs.add_parser("run", help="run one seeded experiment")
    p_run.add_argument("--m", type=int, required=True)
    p_run.add_argument("--gens", type=int, choices=(2, 3), default=2)
    _add_common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_table = subs.add_parser("table", help="sweep a range of orders")
    p_table.add_argument("--m-min", type=int, required=True)
    p_table.add_argument("--m-max", type=int, required=True)
    p_table.add_argument("--trials", type=_positive, default=1)
    _add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_witt = subs.add_parser("witt", help="free Lie algebra dimensions")
    p_witt.add_argument("--gens", type=_positive, default=2)
    p_witt.add_argument("--max-degree", type=_positive, default=5)
    p_witt.add_argument("--format", choices=("text", "json"), default="text")
    p_witt.set_defaults(func=_cmd_witt)

    p_check = subs.add_parser(
        "check-paper",
        help="replay the published reference experiments against the "
        "built-in expected table",
    )
    p_check.add_argument("--seeds", type=_positive, default=1)
    p_check.add_argument("--include-slow", action="store_true")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--seed", type=_u64, default=0)
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())

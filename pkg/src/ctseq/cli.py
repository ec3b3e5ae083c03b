"""Command-line front end.

Subcommands: seq, shortest-zero, automaton, bounds, search, verify-paper,
plot. Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded, 4 file I/O error. All machine-readable output
uses decimal strings for big naturals and contains no timestamps, so
identical invocations produce identical bytes (pass --no-timing to search
to blank the per-row runtimes as well).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import search as search_mod
from .automaton import (
    CapExceeded,
    Found,
    NoneExists,
    build_rz,
    machine_to_json_dict,
    minimize,
    shortest_zero_enum,
    shortest_zero_exact,
    to_dot,
    to_linrep,
    zero_state_reachable,
)
from .bounds import base_report, classify
from .laurent import LaurentPoly, PolyParseError, ct_pow_sequence, parse
from .numtheory import is_prime
from .svgplot import PlotPoint, scatter_svg
from .verify import format_table, run_reference_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP_EXCEEDED = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _parse_poly(args) -> LaurentPoly:
    if not is_prime(args.prime):
        raise CliError(EXIT_USAGE, f"--prime {args.prime} is not prime")
    try:
        poly = parse(args.poly, args.prime)
    except PolyParseError as exc:
        raise CliError(EXIT_USAGE, f"cannot parse --poly: {exc}")
    if poly.is_zero:
        raise CliError(
            EXIT_USAGE,
            f"polynomial reduces to zero mod {args.prime}; "
            "the sequence is 1, 0, 0, ... with first zero 1",
        )
    return poly


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc}")


def cmd_seq(args) -> int:
    poly = _parse_poly(args)
    if args.count < 0:
        raise CliError(EXIT_USAGE, "--count must be >= 0")
    if args.engine == "oracle":
        values = ct_pow_sequence(poly, LaurentPoly.one(poly.p), args.count)
    elif args.engine == "linrep":
        values = to_linrep(poly).sequence(args.count)
    else:
        values = build_rz(poly).machine.sequence(args.count)
    if values:
        print(",".join(str(v) for v in values))
    return EXIT_OK


def cmd_shortest_zero(args) -> int:
    poly = _parse_poly(args)
    machine = build_rz(poly).machine
    if args.method == "enum":
        outcome = shortest_zero_enum(machine, args.cap)
    else:
        outcome = shortest_zero_exact(machine)
    if isinstance(outcome, Found):
        print(outcome.n0)
        return EXIT_OK
    if isinstance(outcome, NoneExists):
        print("none")
        return EXIT_OK
    print("cap-exceeded")
    return EXIT_CAP_EXCEEDED


def cmd_automaton(args) -> int:
    poly = _parse_poly(args)
    rz = build_rz(poly)
    machine = rz.machine
    minimized = minimize(machine)
    if args.stats or not (args.dot or args.json):
        reachable = "true" if zero_state_reachable(machine) else "false"
        print(
            f"states={machine.num_states} kappa={minimized.num_states} "
            f"zero_reachable={reachable}"
        )
    dump = minimized if args.minimize else machine
    labels = None if args.minimize else [str(a) for a in rz.state_polys]
    if args.dot:
        _write_text(args.dot, to_dot(dump, labels=labels))
    if args.json:
        polys = None if args.minimize else rz.state_polys
        data = machine_to_json_dict(dump, state_polys=polys)
        _write_text(args.json, json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    poly = _parse_poly(args)
    deg = poly.degree()
    rz = build_rz(poly)
    kap = minimize(rz.machine).num_states
    outcome = shortest_zero_exact(rz.machine)
    if isinstance(outcome, Found):
        report = classify(outcome.n0, poly.p, deg, kappa=kap, r=args.r)
    else:
        report = base_report(poly.p, deg, kappa=kap, r=args.r)
    print(json.dumps(report.to_json_dict(), indent=2))
    return EXIT_OK


def _search_config(args) -> search_mod.ExperimentConfig:
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot read {args.config}: {exc}")
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_USAGE, f"malformed config {args.config}: {exc}")
        try:
            return search_mod.ExperimentConfig.from_json_dict(data)
        except (TypeError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"invalid config: {exc}")
    if args.count is None or args.degree is None or args.max_prime is None:
        raise CliError(
            EXIT_USAGE, "--count, --degree and --max-prime are required "
            "unless --config is given",
        )
    try:
        return search_mod.ExperimentConfig(
            num_polynomials=args.count,
            degree=args.degree,
            max_prime=args.max_prime,
            cap=args.cap,
            master_seed=args.seed,
            compute_kappa=args.kappa,
            parallelism=args.parallelism,
            engine="enum" if args.cap_engine else "exact",
        )
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"invalid config: {exc}")


def cmd_search(args) -> int:
    cfg = _search_config(args)
    results = search_mod.run_experiment(cfg)
    timing = not args.no_timing
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot create {out_dir}: {exc}")
    written = []
    if args.format in ("json", "both"):
        path = out_dir / "results.json"
        _write_text(
            str(path), search_mod.results_to_json(cfg, results, include_timing=timing)
        )
        written.append(str(path))
    if args.format in ("csv", "both"):
        path = out_dir / "results.csv"
        _write_text(
            str(path), search_mod.results_to_csv(results, include_timing=timing)
        )
        written.append(str(path))
    counts = search_mod.summarize(results)
    print(
        f"polys={cfg.num_polynomials} rows={counts['rows']} "
        f"found={counts['found']} none={counts['none']} "
        f"cap-exceeded={counts['cap-exceeded']} error={counts['error']} "
        f"violations={counts['violations']}"
    )
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    checks = run_reference_checks()
    sys.stdout.write(format_table(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY_FAILED


def cmd_plot(args) -> int:
    try:
        data = json.loads(Path(args.results).read_text())
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {args.results}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_USAGE, f"malformed results file: {exc}")
    if not isinstance(data, dict) or "polynomials" not in data:
        raise CliError(EXIT_USAGE, "malformed results file: missing 'polynomials'")
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot create {out_dir}: {exc}")
    for entry in data["polynomials"]:
        try:
            points = []
            for row in entry["rows"]:
                if row["outcome"] == "found":
                    report = row.get("report") or {}
                    points.append(
                        PlotPoint(
                            p=int(row["p"]),
                            n0=int(row["n0"]),
                            violation=bool(report.get("violates_conjecture")),
                        )
                    )
                elif row["outcome"] == "none":
                    points.append(PlotPoint(p=int(row["p"]), n0=None))
            title = f"{entry['poly']} (id {entry['poly_id']})"
            svg = scatter_svg(title, points)
            path = out_dir / f"plot_{entry['poly_id']}.svg"
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"malformed results file: {exc}")
        _write_text(str(path), svg)
    print(f"wrote {len(data['polynomials'])} plot(s) to {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctseq",
        description="Constant term sequences mod p: sequences, automata, "
        "first zeros, bounds, and randomized searches.",
    )
    sub = parser.add_subparsers(dest="command")

    poly_args = argparse.ArgumentParser(add_help=False)
    poly_args.add_argument("--poly", required=True, help="polynomial, e.g. 't+t^-1'")
    poly_args.add_argument("--prime", type=int, required=True, help="prime modulus")

    p_seq = sub.add_parser("seq", parents=[poly_args], help="print sequence values")
    p_seq.add_argument("--count", type=int, required=True)
    p_seq.add_argument(
        "--engine",
        choices=("oracle", "automaton", "linrep"),
        default="automaton",
    )
    p_seq.set_defaults(func=cmd_seq)

    p_zero = sub.add_parser(
        "shortest-zero", parents=[poly_args], help="first index with value 0"
    )
    p_zero.add_argument("--method", choices=("exact", "enum"), default="exact")
    p_zero.add_argument("--cap", type=int, default=search_mod.DEFAULT_CAP)
    p_zero.set_defaults(func=cmd_shortest_zero)

    p_auto = sub.add_parser(
        "automaton", parents=[poly_args], help="build and inspect the machine"
    )
    p_auto.add_argument("--stats", action="store_true")
    p_auto.add_argument("--dot", metavar="FILE")
    p_auto.add_argument("--json", metavar="FILE")
    p_auto.add_argument("--minimize", action="store_true")
    p_auto.set_defaults(func=cmd_automaton)

    p_bounds = sub.add_parser(
        "bounds", parents=[poly_args], help="bound report as JSON"
    )
    p_bounds.add_argument("--r", type=int, default=1, help="variable count")
    p_bounds.set_defaults(func=cmd_bounds)

    p_search = sub.add_parser("search", help="randomized violation search")
    p_search.add_argument("--config", metavar="FILE", help="JSON config file")
    p_search.add_argument("--count", type=int, help="number of polynomials")
    p_search.add_argument("--degree", type=int)
    p_search.add_argument("--max-prime", type=int)
    p_search.add_argument("--cap", type=int, default=search_mod.DEFAULT_CAP)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--kappa", action="store_true", help="also minimize")
    p_search.add_argument("--parallelism", type=int, default=1)
    p_search.add_argument(
        "--cap-engine",
        action="store_true",
        help="use the capped enumeration instead of the exact engine",
    )
    p_search.add_argument("--out", default=".")
    p_search.add_argument("--format", choices=("json", "csv", "both"), default="both")
    p_search.add_argument(
        "--no-timing", action="store_true", help="blank runtimes for golden files"
    )
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser(
        "verify-paper", help="re-derive the published reference values"
    )
    p_verify.set_defaults(func=cmd_verify_paper)

    p_plot = sub.add_parser("plot", help="SVG scatter per polynomial")
    p_plot.add_argument("--results", required=True, help="results.json from search")
    p_plot.add_argument("--out", default=".")
    p_plot.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ctseq: {exc.message}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

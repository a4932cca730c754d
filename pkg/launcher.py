#!/usr/bin/env python3
"""
Coset Leader Toolkit Launcher
Command-line access to the coset-leader engine, the brute-force oracle,
code statistics and the complete decoder.

    python launcher.py leaders -H matrices/example_10_4.txt
    python launcher.py decode -H matrices/example_10_4.txt -y 0000110000
"""

import argparse
import logging
import sys
from typing import Callable, List, NoReturn, Optional

from clbc_config import ConfigError, check_oracle_cap, configure_logging
from clbc_engine import clbc_run
from code_analysis import CodeStats, compute_stats, decode
from coset_oracle import OracleCapExceeded, enumerate_cosets, min_distance, verify
from gf2_core import BinaryWord, ContractViolation
from matrix_io import MatrixParseError, build_document, load_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_DISCREPANCY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def print_banner(title: str) -> None:
    print("=" * 60)
    print(f"           {title}")
    print("=" * 60)


def print_stats(stats: CodeStats) -> None:
    print(f"n={stats.n}  r={stats.r}  k={stats.k}  cosets={stats.num_cosets}")
    print(f"Coset leaders:           {stats.total_leaders}")
    print(f"WDCL:                    {stats.wdcl}")
    print(f"#(CL):                   {stats.leader_counts}")
    print(f"Covering radius:         {stats.covering_radius}")
    print(f"Newton radius:           {stats.newton_radius}")
    print(f"Unique-leader cosets:    {stats.unique_leader_cosets}")
    if stats.d is None and stats.k == 0:
        print("Minimum distance:        undefined (no nonzero codeword)")
    elif stats.d is None:
        print("Minimum distance:        not computed (t and B(C,t) cosets unavailable)")
    else:
        print(f"Minimum distance:        {stats.d}")
        print(f"Error capability t:      {stats.t}")
        print(f"Cosets meeting B(C,t):   {stats.ball_cosets}")


def _cap(args: argparse.Namespace) -> Optional[int]:
    return None if args.cap is None else check_oracle_cap(args.cap)


def run_leaders(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    result = clbc_run(H, compute_matphi=not args.no_matphi)
    stats = compute_stats(result)

    print_banner("COSET LEADERS")
    for j, tau in enumerate(result.transversal):
        leaders = ", ".join(str(w) for w in result.leader_table.leaders(j))
        print(f"{j + 1:5d}  {result.transversal.syndrome_of(j)}  {tau}  [{leaders}]")
    print("-" * 60)
    print_stats(stats)
    print(f"Iterations:              {result.iteration_count}")
    print(f"✅ {result.num_cosets} cosets, {result.total_leaders} coset leaders")

    if args.json:
        build_document(result, stats).save(args.json)
        print(f"Results saved to {args.json}")
    return EXIT_OK


def run_stats(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    result = clbc_run(H, radii_only=True)
    d = min_distance(H, cap=_cap(args)) if args.with_d else None
    print_banner("CODE STATISTICS")
    print_stats(compute_stats(result, d))
    return EXIT_OK


def run_decode(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    y = BinaryWord.from_string(args.y)
    result = clbc_run(H)
    answers = decode(y, result)

    print_banner("COMPLETE DECODING")
    print(f"Received:  {y}")
    for answer in answers:
        print(f"  error {answer.error}  codeword {answer.codeword}  distance {answer.distance}")
    if len(answers) == 1:
        print("✅ Unique nearest codeword")
    else:
        print(f"⚠️  {len(answers)} nearest codewords at distance {answers[0].distance}")
    return EXIT_OK


def run_matphi(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    result = clbc_run(H)
    print_banner("MATPHI")
    rows = result.matphi.rows()
    for j, tau in enumerate(result.transversal):
        images = " ".join(f"{target + 1:3d}" for target in rows[j])
        print(f"{j + 1:5d}  {tau}  {images}")
    if args.json:
        build_document(result, compute_stats(result)).save(args.json)
        print(f"Results saved to {args.json}")
    return EXIT_OK


def run_oracle(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    truth = enumerate_cosets(H, cap=_cap(args), progress=args.progress)
    print_banner("BRUTE-FORCE COSET TABLE")
    for coset in truth:
        leaders = ", ".join(str(w) for w in coset.leaders)
        print(f"{coset.syndrome}  weight {coset.min_weight}  size {coset.coset_size}  [{leaders}]")
    print("-" * 60)
    print(f"✅ {truth.num_cosets} cosets, {truth.total_leaders} coset leaders")
    return EXIT_OK


def run_verify(args: argparse.Namespace) -> int:
    H = load_matrix(args.matrix)
    truth = enumerate_cosets(H, cap=_cap(args), progress=args.progress)
    result = clbc_run(H, compute_matphi=False)
    report = verify(result, truth)
    print_banner("VERIFICATION")
    print(f"Cosets checked: {report.cosets_checked}")
    if report.ok:
        print("✅ Engine matches the brute-force oracle")
        return EXIT_OK
    for line in report.discrepancies:
        print(f"❌ {line}")
    print(f"{len(report.discrepancies)} discrepancies found", file=sys.stderr)
    return EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="launcher.py", description="Coset leaders of binary linear codes")
    parser.add_argument("--verbose", action="store_true", help="log progress at INFO level")
    parser.add_argument("--debug", action="store_true", help="log every discovered coset")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-H", dest="matrix", required=True, help="parity-check matrix file")
        p.set_defaults(handler=handler)
        return p

    p = command("leaders", run_leaders, "all coset leaders and statistics")
    p.add_argument("--json", help="write the result document to this file")
    p.add_argument("--no-matphi", action="store_true", help="skip the Matphi table")

    p = command("stats", run_stats, "code statistics only")
    p.add_argument("--with-d", action="store_true", help="compute d and t with the oracle")
    p.add_argument("--cap", type=int, help="oracle enumeration cap")

    p = command("decode", run_decode, "all nearest codewords of a received word")
    p.add_argument("-y", required=True, help="received word as a 0/1 string")

    p = command("matphi", run_matphi, "the Matphi table")
    p.add_argument("--json", help="write the result document to this file")

    for name, handler, text in (("oracle", run_oracle, "brute-force coset table"),
                                ("verify", run_verify, "check the engine against the oracle")):
        p = command(name, handler, text)
        p.add_argument("--cap", type=int, help="oracle enumeration cap")
        p.add_argument("--progress", action="store_true", help="show a progress bar")

    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code or EXIT_OK

    try:
        if args.debug:
            configure_logging(logging.DEBUG)
        elif args.verbose:
            configure_logging(logging.INFO)
        else:
            configure_logging()
        return args.handler(args)
    except OracleCapExceeded as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CAP
    except (MatrixParseError, ContractViolation, ConfigError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"❌ Could not read or write file: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> NoReturn:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands::

    syzlab verify-class --kmax N [--json PATH]
    syzlab scroll --k K [--prime P] [--json PATH] [--dump-matrices DIR]
    syzlab gonal --k K [--prime P] [--seed S] [--route quotient|points|both] [...]
    syzlab maxcliff --k K [--prime P] [--seed S] [...]
    syzlab ci --genus 4|5 [--prime P] [--seed S] [...]
    syzlab suite --config PATH [--json PATH]
    syzlab dvr-demo --size N [--seed S] [--count C] [--json PATH]

Exit codes: 0 all checks passed, 1 a check failed, 2 degenerate random
instance after retries, 3 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import SyzlabError
from .fieldmath import DEFAULT_PRIME, is_prime
from .models import MIN_PRIME
from . import runs

USAGE_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _add_common(sub, prime=True, seed=True):
    if prime:
        sub.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    if seed:
        sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--json", metavar="PATH", help="write the full JSON report")
    sub.add_argument(
        "--dump-matrices",
        metavar="DIR",
        help="export the Koszul differentials in MatrixMarket format",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="syzlab")
    cmds = parser.add_subparsers(dest="command", required=True)

    vc = cmds.add_parser("verify-class", parents=[], help="divisor-class verifier")
    vc.add_argument("--kmax", type=int, required=True)
    vc.add_argument("--json", metavar="PATH")

    sc = cmds.add_parser("scroll", help="balanced scroll strand")
    sc.add_argument("--k", type=int, required=True)
    _add_common(sc, seed=False)

    go = cmds.add_parser("gonal", help="k-gonal bidegree curve strand")
    go.add_argument("--k", type=int, required=True)
    go.add_argument(
        "--route", choices=("quotient", "points", "both"), default="both"
    )
    _add_common(go)

    mc = cmds.add_parser("maxcliff", help="maximal-Clifford plane curve strand")
    mc.add_argument("--k", type=int, required=True)
    _add_common(mc)

    ci = cmds.add_parser("ci", help="complete-intersection fixture strand")
    ci.add_argument("--genus", type=int, required=True, choices=(4, 5))
    _add_common(ci)

    su = cmds.add_parser("suite", help="run a JSON list of configs")
    su.add_argument("--config", required=True, metavar="PATH")
    su.add_argument("--json", metavar="PATH")
    su.add_argument("--threads", type=int, default=None)

    dv = cmds.add_parser("dvr-demo", help="local degeneracy-bound demo")
    dv.add_argument("--size", type=int, required=True)
    dv.add_argument("--seed", type=int, default=0)
    dv.add_argument("--count", type=int, default=1)
    dv.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    dv.add_argument("--json", metavar="PATH")

    return parser


def _check_prime(parser: _Parser, prime: int) -> None:
    if prime < MIN_PRIME or not is_prime(prime):
        parser.error(f"--prime must be a prime >= {MIN_PRIME}")


def _finish(outcome: runs.RunOutcome, json_path, quiet=False) -> int:
    if json_path:
        runs.write_json(outcome.report, json_path)
    if not quiet:
        _summarize(outcome.report)
    return outcome.exit_code


def _summarize(report: dict) -> None:
    cmd = report.get("command", "?")
    if "error" in report:
        print(f"{cmd}: DEGENERATE ({report['error']})")
        return
    if cmd == "verify-class":
        for entry in report["entries"]:
            print(
                f"k={entry['k']}: N={entry['n_closed']} "
                f"HM={entry['harris_mumford']} ratio(k-1)={entry['ratio_is_k_minus_1']} "
                f"ok={entry['all_ok']}"
            )
    elif cmd == "suite":
        for res in report["results"]:
            cfg = res["config"]
            print(f"{cfg['command']} {json.dumps(cfg, sort_keys=True)}: "
                  f"{'pass' if res['pass'] else 'FAIL'}")
    elif cmd == "dvr-demo":
        for entry in report["entries"]:
            print(
                f"exponents {entry['exponents']}: corank {entry['corank_at_0']}, "
                f"valuation {entry['det_valuation']}, bound {entry['bound_holds']}"
            )
    else:
        if "strand" in report:
            print(f"{cmd}: strand {report['strand']['dims']}")
        for route, strand in report.get("routes", {}).items():
            print(f"{cmd} [{route}]: strand {strand['dims']}")
        if "extra_syzygies_at_k" in report:
            print(f"extra syzygies at j=k: {report['extra_syzygies_at_k']}")
        for chk in report.get("checks", []):
            mark = "ok " if chk["ok"] else "FAIL"
            detail = f" ({chk['detail']})" if chk["detail"] else ""
            print(f"  [{mark}] {chk['name']}{detail}")
    print(f"pass: {report.get('pass')}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify-class":
            if args.kmax < 3:
                parser.error("--kmax must be at least 3")
            return _finish(runs.run_verify_class(args.kmax), args.json)
        if args.command == "scroll":
            if args.k < 3:
                parser.error("--k must be at least 3")
            _check_prime(parser, args.prime)
            return _finish(
                runs.run_scroll(args.k, args.prime, args.dump_matrices), args.json
            )
        if args.command == "gonal":
            if args.k < 3:
                parser.error("--k must be at least 3")
            _check_prime(parser, args.prime)
            return _finish(
                runs.run_gonal(
                    args.k, args.prime, args.seed, args.route, args.dump_matrices
                ),
                args.json,
            )
        if args.command == "maxcliff":
            if args.k < 3:
                parser.error("--k must be at least 3")
            _check_prime(parser, args.prime)
            return _finish(
                runs.run_maxcliff(args.k, args.prime, args.seed, args.dump_matrices),
                args.json,
            )
        if args.command == "ci":
            _check_prime(parser, args.prime)
            return _finish(
                runs.run_ci(args.genus, args.prime, args.seed, args.dump_matrices),
                args.json,
            )
        if args.command == "suite":
            path = Path(args.config)
            try:
                entries = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                print(f"syzlab suite: cannot read config: {exc}", file=sys.stderr)
                return USAGE_EXIT
            try:
                runs.validate_suite_config(entries)
            except runs.SuiteConfigError as exc:
                print(f"syzlab suite: {exc}", file=sys.stderr)
                return USAGE_EXIT
            return _finish(runs.run_suite(entries, args.threads), args.json)
        if args.command == "dvr-demo":
            if args.size < 1:
                parser.error("--size must be at least 1")
            _check_prime(parser, args.prime)
            return _finish(
                runs.run_dvr_demo(args.size, args.seed, args.count, args.prime),
                args.json,
            )
        parser.error(f"unknown command {args.command!r}")
    except SyzlabError as exc:
        print(f"syzlab {args.command}: {exc}", file=sys.stderr)
        return 2 if "degenerate" in type(exc).__name__.lower() else 1
    return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())

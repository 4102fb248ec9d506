"""Command-line driver: ``nhfock verify|gdim|table``.

Exit status is 0 when every selected check passes, 1 on a failed check and
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .functors import functor_I, functor_TR
from .gmod import GradedModule, coinvariant_simple
from .grothendieck import pairing_matrix
from .qlaurent import qbinom
from .suites import SUITES, run_suites


class UsageError(Exception):
    pass


_TOKEN = re.compile(r"\s*(L\d+|TR|I|\(|\)|,|\d+)")


def _tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse module expression at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_module(text: str) -> GradedModule:
    """Evaluate ``L<n>``, ``I(expr)`` and ``TR(expr, k)``.

    >>> parse_module("TR(I(L1), 1)").gdim()
    LaurentInt('1*q^-2 + 1*q^0')
    """
    toks = _tokens(text)
    pos = 0

    def expect(tok: str) -> None:
        nonlocal pos
        if pos >= len(toks) or toks[pos] != tok:
            raise UsageError(f"expected {tok!r} in {text!r}")
        pos += 1

    def expr() -> GradedModule:
        nonlocal pos
        if pos >= len(toks):
            raise UsageError(f"unexpected end of {text!r}")
        tok = toks[pos]
        pos += 1
        if tok.startswith("L"):
            n = int(tok[1:])
            if n > 6:
                raise UsageError("simples are available for n <= 6")
            return coinvariant_simple(n)
        if tok == "I":
            expect("(")
            inner = expr()
            expect(")")
            return functor_I(inner)
        if tok == "TR":
            expect("(")
            inner = expr()
            expect(",")
            if pos >= len(toks) or not toks[pos].isdigit():
                raise UsageError(f"TR needs an integer k in {text!r}")
            k = int(toks[pos])
            pos += 1
            expect(")")
            return functor_TR(inner, k)
        raise UsageError(f"unexpected {tok!r} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise UsageError(f"trailing input in {text!r}")
    return out


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nhfock", description="nilHecke Fock space verification")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--max-k", type=int, default=3)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--timing", action="store_true", help="include wall time in the report")
    v.add_argument("--quiet", action="store_true", help="only print the summary line")
    g = sub.add_parser("gdim", help="graded dimension of a module expression")
    g.add_argument("--module", required=True, help="L<n> | I(expr) | TR(expr,k)")
    t = sub.add_parser("table", help="structure-constant tables")
    t.add_argument("--what", choices=("binom", "pairing"), required=True)
    t.add_argument("--max-n", type=int, default=4)
    return p


def _verify(args) -> int:
    if args.max_n < 0 or args.max_k < 0:
        raise UsageError("--max-n and --max-k must be non-negative")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    start = time.perf_counter()
    report = run_suites(names, args.max_n, args.max_k, args.seed)
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 3)
    if not args.quiet:
        for c in report["claims"]:
            params = ",".join(f"{k}={v}" for k, v in sorted(c["params"].items()))
            status = "PASS" if c["pass"] else "FAIL"
            print(f"{status} {c['suite']}/{c['claim']}[{params}] lhs={c['lhs']} rhs={c['rhs']} shift={c['shift']}")
        for prob in report["ledger_problems"]:
            print(f"FAIL ledger: {prob}")
    n_pass = sum(c["pass"] for c in report["claims"])
    print(f"{'PASS' if report['pass'] else 'FAIL'}: {n_pass}/{len(report['claims'])} claims, "
          f"ledger {'consistent' if not report['ledger_problems'] else 'inconsistent'}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if report["pass"] else 1


def _table(args) -> int:
    top = args.max_n
    if args.what == "binom":
        print("[P_n][P_m] = c(n,m) [P_{n+m}], c = [n+m choose n] at v = q^-2")
        for n in range(top + 1):
            for m in range(top + 1):
                print(f"n={n} m={m}: {qbinom(n + m, n).substitute_power(-2)}")
    else:
        print("<[P_i], [L_j]>")
        for i, row in enumerate(pairing_matrix(top)):
            print(f"i={i}: " + " | ".join(str(x) for x in row))
    return 0


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "gdim":
            print(parse_module(args.module).gdim())
            return 0
        return _table(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

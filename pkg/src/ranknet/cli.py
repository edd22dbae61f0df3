"""Command line front end: sort, analyze, seq, verify, export.

Every command is a thin wrapper over the library; outputs are byte-identical
to calling the corresponding functions directly. Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import analytics, engine, netbuild, rankcore
from .errors import RankNetError
from .netbuild import Builder

__all__ = ["main"]


def _parse_numbers(text: str) -> list:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("no numbers found in input")
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
            continue
        except ValueError:
            pass
        val = float(tok)  # may raise ValueError
        if math.isnan(val) or math.isinf(val):
            raise ValueError(f"non-finite value: {tok}")
        out.append(val)
    return out


def _fmt(values) -> str:
    return ",".join(str(v) for v in values)


def cmd_sort(args) -> int:
    try:
        if args.input:
            with open(args.input) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        x = _parse_numbers(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(x) == 1:
        pi = np.zeros(1, dtype=np.int64)
        s = np.asarray(x)
    else:
        net = netbuild.build_network(len(x), args.algo)
        pi = engine.execute(net, x, workers=args.workers)
        s = engine.apply_permutation(np.asarray(x), pi)
    print(f"pi: {_fmt(pi.tolist())}")
    print(f"sorted: {_fmt(s.tolist())}")
    return 0


def cmd_analyze(args) -> int:
    prof = analytics.complexity_profile(args.n)
    print(f"N: {prof.n}")
    print(
        "levels per prime: "
        + ", ".join(f"{p}={c}" for p, c in sorted(prof.level_coeffs.items()))
    )
    print(
        "comparators per prime: "
        + ", ".join(f"{p}={c}" for p, c in sorted(prof.comparator_coeffs.items()))
    )
    print(f"partial rank count |L_N|: {prof.partial_rank_count}")
    print(f"addition complexity: {prof.addition_complexity}")
    print(f"total comparators |C_N|: {prof.total_comparators}")
    print(f"binary equivalent: {prof.binary_equivalent}")
    return 0


_SEQ_FUNCS = {
    "levels": (2, analytics.partial_rank_count),
    "comparators": (1, analytics.total_comparators),
    "adds": (2, analytics.addition_complexity),
}


def cmd_seq(args) -> int:
    start, fn = _SEQ_FUNCS[args.kind]
    lines = [f"{n},{fn(n)}" for n in range(start, args.max + 1)]
    text = "\n".join(lines) + "\n"
    if args.csv:
        try:
            with open(args.csv, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return 0


def _verify_oracle(max_n: int, samples: int, rng) -> str | None:
    for n in range(2, max_n + 1):
        for builder in Builder:
            net = netbuild.build_network(n, builder)
            for s in range(samples):
                if s % 2 == 0:
                    x = rng.integers(0, max(n // 2, 1), size=n)
                else:
                    x = rng.standard_normal(n)
                expect = rankcore.stable_rank(x)
                got = engine.execute(net, x)
                if not np.array_equal(got, expect):
                    return (
                        f"oracle-equivalence: FAIL n={n} builder={builder.value} "
                        f"x={x.tolist()} expected={expect.tolist()} got={got.tolist()}"
                    )
    return None


def _verify_coverage(max_n: int, inject: str | None) -> str | None:
    for n in range(2, max_n + 1):
        for builder in Builder:
            net = netbuild.build_network(n, builder)
            if inject == "pair-coverage" and n == max_n and builder == Builder.DIVISOR:
                comp = net.levels[-1].comparators[-1]
                comp.indices = (comp.indices[-1],) + comp.indices[1:]  # duplicate index
            report = netbuild.validate_network(net)
            if not report.ok:
                return (
                    f"pair-coverage: FAIL n={n} builder={builder.value}: "
                    + report.violations[0]
                )
    return None


def _verify_counts(max_n: int) -> str | None:
    for n in range(2, max_n + 1):
        if analytics.maundy_a(n) != analytics.partial_rank_count(n):
            return f"maundy-identity: FAIL n={n}"
        ln = analytics.partial_rank_count(n)
        cn = analytics.total_comparators(n)
        if not (1 <= ln <= n - 1) or not (1 <= cn <= n * (n - 1) // 2):
            return f"bounds: FAIL n={n} |L_N|={ln} |C_N|={cn}"
    return None


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    checks = [
        ("pair-coverage", lambda: _verify_coverage(args.max, args.inject_fault)),
        ("oracle-equivalence", lambda: _verify_oracle(args.max, args.samples, rng)),
        ("counting", lambda: _verify_counts(args.max)),
    ]
    for name, fn in checks:
        failure = fn()
        if failure:
            print(failure)
            return 1
        print(f"{name}: ok")
    return 0


def cmd_export(args) -> int:
    net = netbuild.build_network(args.n, args.algo)
    text = (
        netbuild.network_to_json(net)
        if args.format == "json"
        else netbuild.network_to_dot(net)
    )
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ranknet")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sort", help="rank and sort a sequence of numbers")
    sp.add_argument("--algo", choices=[b.value for b in Builder], default="binary")
    sp.add_argument("--input", help="file with newline/comma separated numbers")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_sort)

    ap = sub.add_parser("analyze", help="print the complexity profile for N")
    ap.add_argument("--n", type=int, required=True)
    ap.set_defaults(func=cmd_analyze)

    qp = sub.add_parser("seq", help="emit a counting sequence as CSV rows")
    qp.add_argument("--kind", choices=sorted(_SEQ_FUNCS), required=True)
    qp.add_argument("--max", type=int, required=True)
    qp.add_argument("--csv", help="write to this file instead of stdout")
    qp.set_defaults(func=cmd_seq)

    vp = sub.add_parser("verify", help="run the self-verification suite")
    vp.add_argument("--max", type=int, required=True)
    vp.add_argument("--samples", type=int, default=20)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument(
        "--inject-fault",
        choices=["pair-coverage"],
        default=None,
        help="test hook: corrupt a network to exercise failure reporting",
    )
    vp.set_defaults(func=cmd_verify)

    ep = sub.add_parser("export", help="write a network as JSON or DOT")
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--algo", choices=[b.value for b in Builder], required=True)
    ep.add_argument("--format", choices=["json", "dot"], required=True)
    ep.add_argument("--out", required=True)
    ep.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RankNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

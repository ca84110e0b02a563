"""Command-line front door.

Subcommand-first grammar; jump sets are comma-separated integers. All
payload output is deterministic (timing goes to stderr). Exit codes:
0 = success (classify: any isomorphism verdict), 1 = classify decided
NotIsomorphic, 2 = usage or domain error, 3 = oracle refused (budget).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import census as census_mod
from . import families, render
from .type1 import type1_orbit
from .type2 import ThetaParams, classify_pair, theta_set, type2_set

EXIT_OK = 0
EXIT_NOT_ISOMORPHIC = 1
EXIT_USAGE = 2
EXIT_ORACLE_REFUSED = 3


def _jumps(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated jump list: {text!r}")


def _fmt(jumps) -> str:
    return ",".join(map(str, jumps))


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circulant-iso",
                                description="Type-1/Type-2 circulant graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify the relation of two jump sets")
    c.add_argument("n", type=int)
    c.add_argument("r", type=_jumps)
    c.add_argument("s", type=_jumps)
    c.add_argument("--budget", type=int, default=10_000_000)

    t = sub.add_parser("theta", help="apply the rotation transform to a jump set")
    t.add_argument("n", type=int)
    t.add_argument("m", type=int)
    t.add_argument("t", type=int)
    t.add_argument("r", type=_jumps)

    o = sub.add_parser("orbit", help="Type-1 orbit of a jump set")
    o.add_argument("n", type=int)
    o.add_argument("r", type=_jumps)

    t2 = sub.add_parser("t2set", help="Type-2 set of a jump set w.r.t. m")
    t2.add_argument("n", type=int)
    t2.add_argument("m", type=int)
    t2.add_argument("r", type=_jumps)

    f = sub.add_parser("family", help="construct a family pair")
    f.add_argument("which", choices=("42", "43"))
    f.add_argument("n", type=int)
    f.add_argument("s", type=int)
    f.add_argument("p", type=_jumps, nargs="?", default=None,
                   help="even-part factors p1,p2,... (family 43 only)")

    ce = sub.add_parser("census", help="run a per-order census")
    ce.add_argument("n", type=int)
    ce.add_argument("--out", default=None, help="directory for persisted artifacts")
    ce.add_argument("--cap", type=int, default=census_mod.DEFAULT_CAP)
    ce.add_argument("--min-size", type=int, default=3)
    ce.add_argument("--max-size", type=int, default=None)
    ce.add_argument("--relaxed", action="store_true",
                    help="allow disconnected sets and |R| >= 2")
    ce.add_argument("--workers", type=int, default=1)

    re = sub.add_parser("render", help="emit SVG rotation frames")
    re.add_argument("n", type=int)
    re.add_argument("r", type=_jumps)
    re.add_argument("m", type=int)
    re.add_argument("t_from", type=int)
    re.add_argument("t_to", type=int)
    re.add_argument("out_dir")
    return p


def _run(args) -> int:
    if args.command == "classify":
        try:
            verdict = classify_pair(args.n, args.r, args.s, oracle_budget=args.budget)
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ORACLE_REFUSED
        print(verdict.describe())
        return EXIT_OK if verdict.isomorphic else EXIT_NOT_ISOMORPHIC

    if args.command == "theta":
        image = theta_set(ThetaParams(args.n, args.m, args.t), args.r)
        print(_fmt(image) if image is not None else "not-circulant")
        return EXIT_OK

    if args.command == "orbit":
        orb = type1_orbit(args.n, args.r)
        for member in sorted(orb.members):
            print(f"{_fmt(member)}\tx={orb.witness[member]}")
        return EXIT_OK

    if args.command == "t2set":
        for member in sorted(type2_set(args.n, args.m, args.r)):
            print(_fmt(member))
        return EXIT_OK

    if args.command == "family":
        if args.which == "42":
            if args.p is not None:
                raise ValueError("family 42 takes no even-part factors")
            pair = families.family_42(args.n, args.s)
        else:
            if args.p is None:
                raise ValueError("family 43 needs even-part factors p1,p2,...")
            pair = families.family_43(args.n, args.s, args.p)
        flag = "yes" if pair.degenerate else "no"
        print(f"order={pair.order} R={_fmt(pair.r_jumps)} S={_fmt(pair.s_jumps)} "
              f"t={pair.expected_t} degenerate={flag}")
        return EXIT_OK

    if args.command == "census":
        kwargs = dict(cap=args.cap, min_size=args.min_size, max_size=args.max_size,
                      workers=args.workers)
        if args.relaxed:
            kwargs.update(connected_only=False, min_size=min(args.min_size, 2))
        report = census_mod.run_census(args.n, **kwargs)
        print(f"order={report.order} sets={report.set_count} "
              f"classes={len(report.classes)} pairs={report.pair_count} "
              f"pairs_minimal={report.pair_count_minimal}")
        for m, size, count in report.tuple_counts:
            print(f"tuples m={m} size={size} count={count}")
        for m, size, count in report.tuple_counts_minimal:
            print(f"tuples_minimal m={m} size={size} count={count}")
        if args.out:
            main, summary = census_mod.persist(report, args.out)
            print(f"wrote {main} and {summary}")
        print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
        return EXIT_OK

    if args.command == "render":
        paths = render.render_frames(args.n, args.r, args.m, args.t_from,
                                     args.t_to, args.out_dir)
        print(f"wrote {len(paths)} frames to {args.out_dir}")
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = _run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"total {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

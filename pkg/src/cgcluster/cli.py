"""Command-line interface: ``cgcluster <command> ...``.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .cache import SeedCache, seed_digest
from .cg import CGParams, build_initial_seed, build_quiver_cg, w0_conjugate
from .cluster import MutationError, Seed, mutate_seed, quiver_isomorphic, read_sequence, write_sequence
from .exact import X, format_poly
from .poisson import bracket_of, cg_bracket
from .report import RunReport
from .verify import SUITES, UsageError, check_bounds, run_suite, suite_gap, suite_logcanonical, suite_tp

log = logging.getLogger("cgcluster")


def parse_ns(text: str) -> list[int]:
    """'3', '3,4' or '3..6'."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            out = list(range(int(a), int(b) + 1))
        else:
            out = [int(t) for t in text.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from e
    if not out:
        raise argparse.ArgumentTypeError(f"empty n range {text!r}")
    return out


def parse_pair(text: str) -> tuple[int, int]:
    try:
        i, j = text.split(",")
        return int(i), int(j)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected i,j, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", choices=("mat", "sl"), default="mat")
    common.add_argument("--depth", type=int, default=None, help="enumeration depth (gap search)")
    common.add_argument("--cache-dir", type=Path, default=None, help="seed cache (env CGCLUSTER_CACHE)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for pairwise checks")
    common.add_argument("--out-dir", type=Path, default=None, help="write report.json and figures here")
    common.add_argument("--no-timings", action="store_true", help="omit timing fields from the report")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="cgcluster", description=__doc__.splitlines()[0], parents=[common])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quiver", parents=[common], help="emit the CG quiver")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--flavor", choices=("plain", "prime", "hat"), default="plain")
    q.add_argument("--format", choices=("dot", "json"), default="dot")

    i = sub.add_parser("initial", parents=[common], help="emit the initial seed")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--json", action="store_true", help="seed file format (default; kept for clarity)")

    b = sub.add_parser("bracket", parents=[common], help="bracket of two matrix entries")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--pair", type=parse_pair, nargs=2, required=True, metavar="I,J")

    c = sub.add_parser("check", parents=[common], help="single checks")
    c.add_argument("what", choices=("logcanonical",))
    c.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n", type=parse_ns, default=[3])
    v.add_argument("--compat-depth", type=int, default=1)
    v.add_argument("--directions", type=int, default=None, help="sampled first-step directions (compat)")

    m = sub.add_parser("mutate", parents=[common], help="apply a mutation sequence to a seed file")
    m.add_argument("seed", type=Path)
    m.add_argument("sequence", type=Path)
    m.add_argument("--out", type=Path, default=None, help="terminal seed file")

    sub.add_parser("gap", parents=[common], help="gap computations and bounded x12 search")

    t = sub.add_parser("tp", parents=[common], help="total positivity tests")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--matrix", type=Path, default=None, help="JSON array of rational strings")
    t.add_argument("--family", choices=("f1w0+f2", "all", "cg"), default="f1w0+f2")
    return ap


def _emit(rep: RunReport, args) -> int:
    if args.out_dir is not None:
        rep.artifacts.append(args.out_dir / "report.json")
        rep.write(args.out_dir / "report.json")
    print(rep.dumps(timings=not args.no_timings))
    return 0 if rep.passed else 1


def cmd_quiver(args) -> int:
    if args.n < 3:
        raise UsageError("n must be at least 3")
    q = build_quiver_cg(CGParams.make(args.n, "sl" if args.flavor == "prime" else "mat"), args.flavor)
    if args.format == "dot":
        sys.stdout.write(q.to_dot(f"Q_{args.flavor}_{args.n}"))
    else:
        print(json.dumps(q.to_json(), indent=1))
    if args.out_dir is not None:
        from .plotting import plot_quiver

        path = plot_quiver(q, args.out_dir / f"quiver_{args.flavor}_n{args.n}.png", f"{args.flavor}, n = {args.n}")
        log.info("wrote %s", path)
    return 0


def cmd_initial(args) -> int:
    if args.n < 3:
        raise UsageError("n must be at least 3")
    print(build_initial_seed(CGParams.make(args.n, args.variant)).dumps())
    return 0


def cmd_bracket(args) -> int:
    (i, j), (k, l) = args.pair
    if not all(1 <= a <= args.n for a in (i, j, k, l)):
        raise UsageError("pair indices out of range")
    print(format_poly(bracket_of(X(i, j), X(k, l), cg_bracket(args.n))))
    return 0


def cmd_check(args) -> int:
    rep = RunReport("check logcanonical", {"n": args.n, "variant": args.variant})
    suite_logcanonical(rep, args.n, variant=args.variant, jobs=args.jobs, out_dir=args.out_dir)
    return _emit(rep, args)


def cmd_verify(args) -> int:
    rep = RunReport(f"verify {args.suite}", {"n": args.n, "variant": args.variant, "depth": args.depth,
                                             "compat_depth": args.compat_depth})
    if args.suite != "all":
        for n in args.n:
            check_bounds(args.suite, n)
    run_suite(args.suite, args.n, rep, depth=args.depth, compat_depth=args.compat_depth,
              directions=args.directions, jobs=args.jobs, variant=args.variant, out_dir=args.out_dir)
    return _emit(rep, args)


def cmd_mutate(args) -> int:
    try:
        seed0 = Seed.from_json(json.loads(args.seed.read_text()))
        seq = read_sequence(args.sequence.read_text())
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read inputs: {e}") from e
    n = getattr(seed0.params, "n", None)
    variant = getattr(seed0.params, "variant", args.variant)
    rep = RunReport("mutate", {"seed": str(args.seed), "sequence": write_sequence(seq).strip(), "n": n})
    cache = SeedCache(args.cache_dir) if args.cache_dir or n else None
    base = seed_digest(seed0)
    s, steps = seed0, []
    with rep.timed("mutate"):
        for k, v in enumerate(seq):
            prev = s
            try:
                if cache is not None and n:
                    s = cache.seed(n, variant, seq[: k + 1], lambda: mutate_seed(prev, v), base=base)
                else:
                    s = mutate_seed(prev, v)
            except MutationError as e:
                raise UsageError(f"step {k + 1} ({v}): {e}") from e
            steps.append({"vertex": list(v) if isinstance(v, tuple) else v, "regular": s.regular})
    rep.findings["steps"] = steps
    rep.check("all steps regular", all(st["regular"] for st in steps))
    iso = quiver_isomorphic(s.quiver(), seed0.quiver().opposite())
    rep.findings["terminal quiver isomorphic to opposite of initial"] = iso is not None
    if n:
        target = {w0_conjugate(f, n) for f in seed0.variables}
        rep.findings["terminal cluster equals w0-conjugated initial cluster"] = set(s.variables) == target
    if cache is not None:
        rep.findings["cache"] = cache.stats()
    if args.out is not None:
        args.out.write_text(s.dumps() + "\n")
        rep.artifacts.append(args.out)
    return _emit(rep, args)


def cmd_gap(args) -> int:
    depth = 6 if args.depth is None else args.depth
    rep = RunReport("gap", {"depth": depth, "variant": args.variant})
    suite_gap(rep, 3, depth=depth, variant=args.variant, out_dir=args.out_dir)
    return _emit(rep, args)


def cmd_tp(args) -> int:
    from . import positivity as P

    if args.matrix is None:
        rep = RunReport("tp", {"n": args.n})
        check_bounds("tp", args.n)
        suite_tp(rep, args.n, out_dir=args.out_dir)
        return _emit(rep, args)
    try:
        m = P.load_matrix(args.matrix.read_text())
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read matrix: {e}") from e
    if len(m) != args.n:
        raise UsageError(f"matrix is {len(m)}x{len(m)}, expected n={args.n}")
    rep = RunReport("tp", {"n": args.n, "matrix": str(args.matrix), "family": args.family})
    if args.family == "f1w0+f2":
        result = P.tp_via_test_family(m)
    elif args.family == "all":
        result = P.all_minors_positive(m)
    else:
        result = P.tp_cg_member(m, variant=args.variant)
    rep.findings["positive"] = result
    rep.check("evaluated", True)
    return _emit(rep, args)


COMMANDS = {"quiver": cmd_quiver, "initial": cmd_initial, "bracket": cmd_bracket, "check": cmd_check,
            "verify": cmd_verify, "mutate": cmd_mutate, "gap": cmd_gap, "tp": cmd_tp}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"cgcluster: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

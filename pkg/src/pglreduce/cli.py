"""Command-line front end. Every subcommand writes JSON lines to stdout.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cf_classic, cf_slow, hurwitz, membership
from .gl2 import enumerate_by_height
from .suite import DEFAULT_CONFIG, ConfigError, RunConfig, run_verification_suite
from .textio import parse_matrix, parse_number

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(out, record):
    out.write(json.dumps(record, sort_keys=True) + "\n")


def cmd_expand(args, out):
    for s in cf_classic.states(args.x, args.depth):
        _emit(out, {
            "i": s.i, "n_i": s.n, "p_i": s.p, "q_i": s.q,
            "x_i": str(s.x), "delta_i": str(s.delta), "gamma_i": s.gamma.rows(),
        })
    return EXIT_OK


def cmd_slow(args, out):
    for s in cf_slow.slow_expand(args.x, args.steps):
        _emit(out, {"i": s.i, "move": s.move.value, "x_i": str(s.x), "gamma_prime_i": s.gamma.rows()})
    return EXIT_OK


def cmd_bound(args, out):
    _emit(out, hurwitz.n_of(args.gamma).to_json())
    return EXIT_OK


def cmd_sync(args, out):
    try:
        res = hurwitz.sync_indices(args.gamma, args.x, args.cap)
    except hurwitz.NotSynchronized as e:
        _emit(out, {"found": False, "error": str(e)})
        return EXIT_FAIL
    _emit(out, {"found": True, **res.to_json()})
    return EXIT_OK if res.within_bound else EXIT_FAIL


def cmd_witness(args, out):
    g = hurwitz.equiv_witness(args.x, args.y, args.depth)
    _emit(out, {"x": str(args.x), "y": str(args.y), "depth": args.depth,
                "found": g is not None, "gamma": None if g is None else g.rows()})
    return EXIT_OK


def cmd_verify_t1(args, out):
    rep = membership.verify_theorem1(args.x, args.height, args.depth)
    _emit(out, rep.to_json())
    return EXIT_OK if rep.clean else EXIT_FAIL


def cmd_verify_t2(args, out):
    rep = membership.verify_theorem2(args.x, args.height, args.steps)
    _emit(out, rep.to_json())
    return EXIT_OK if rep.clean else EXIT_FAIL


def _read_corpus(path):
    xs = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            xs.append(parse_number(line))
    return xs


def cmd_verify_t4(args, out):
    status = EXIT_OK
    box = enumerate_by_height(args.height)
    for x in _read_corpus(args.corpus):
        worst, failures = 0, []
        for g in box:
            try:
                res = hurwitz.sync_indices(g, x)
            except hurwitz.NotSynchronized as e:
                failures.append({"gamma": g.rows(), "error": str(e)})
                continue
            if not res.within_bound:
                failures.append(res.to_json())
            worst = max(worst, res.s, res.t)
        _emit(out, {"x": str(x), "height": args.height, "pairs": len(box),
                    "max_index": worst, "failures": failures, "pass": not failures})
        if failures:
            status = EXIT_FAIL
    return status


def cmd_suite(args, out):
    cfg = RunConfig.load(args.config or DEFAULT_CONFIG)
    target = args.output or cfg.output
    code, records = run_verification_suite(cfg)
    if target and target != "-":
        with open(target, "w") as f:
            for r in records:
                _emit(f, r)
    else:
        for r in records:
            _emit(out, r)
    return code


def _arg_type(parse):
    def convert(text):
        try:
            return parse(text)
        except (ValueError, ZeroDivisionError) as e:
            raise argparse.ArgumentTypeError(str(e)) from e

    convert.__name__ = parse.__name__
    return convert


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pglreduce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    number = _arg_type(parse_number)
    matrix = _arg_type(parse_matrix)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help, description=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("expand", cmd_expand,
             "Classic continued fraction x -> 1/(x - floor x): quotients, convergents, "
             "delta forms and reducing matrices per step.")
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--depth", type=int, default=10)

    sp = add("slow", cmd_slow,
             "Slow continued fraction (moves x+1, 1/x-1, x-1) and its matrices per step.")
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--steps", type=int, default=20)

    sp = add("bound", cmd_bound,
             "Synchronization bound N(gamma) of the Hurwitz refinement: 3 if gamma fixes "
             "infinity, else max of M(gamma(inf)), M(gamma^-1(inf)).")
    sp.add_argument("--gamma", type=matrix, required=True)

    sp = add("sync", cmd_sync,
             "Smallest indices s, t at which the expansions of x and gamma(x) coincide; "
             "exit 1 if they exceed N(gamma).")
    sp.add_argument("--gamma", type=matrix, required=True)
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--cap", type=int, default=None)

    sp = add("witness", cmd_witness,
             "Hurwitz equivalence: find gamma with gamma(x) = y from a common tail of "
             "the two expansions.")
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--y", type=number, required=True)
    sp.add_argument("--depth", type=int, default=40)

    sp = add("verify-t1", cmd_verify_t1,
             "Check that the classic reduction matrices of x equal W - (W1 u W2) "
             "(-1 <= g(inf) <= 0, g(x) > 1) on all matrices of bounded height.")
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--height", type=int, default=25)
    sp.add_argument("--depth", type=int, default=None)

    sp = add("verify-t2", cmd_verify_t2,
             "Check that the post-translation slow matrices of x equal W' - W'1 "
             "(g(inf) <= -1, g(x) > 0) on all matrices of bounded height.")
    sp.add_argument("--x", type=number, required=True)
    sp.add_argument("--height", type=int, default=25)
    sp.add_argument("--steps", type=int, default=None)

    sp = add("verify-t4", cmd_verify_t4,
             "Check the synchronization bound N(gamma) for every gamma of bounded "
             "height against every number in a corpus file (one number per line).")
    sp.add_argument("--height", type=int, default=10)
    sp.add_argument("--corpus", required=True)

    sp = add("suite", cmd_suite, "Run every verification over a configured corpus.")
    sp.add_argument("--config", default=None)
    sp.add_argument("--output", default=None)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ConfigError, membership.InsufficientDepth, ValueError, OSError) as e:
        print(f"pglreduce: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

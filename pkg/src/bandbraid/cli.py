"""Command-line front end.

Subcommands: normalize, equal, conjugate, sss, factors, random, verify.
Exit codes are a stable contract: 0 true/success, 1 false, 2 error,
3 undecided (a cap was exceeded).  With ``--format json-lines`` every
result is one JSON object per line with fixed field names, so harnesses
never have to scrape prose.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import conjugacy, factors, normal, oracle, words
from .errors import BraidError, CapExceededError

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_UNDECIDED = 3


def _nf_record(nf: normal.NormalForm) -> dict:
    return {
        "n": nf.n,
        "u": nf.u,
        "factors": [[list(c) for c in a.cycles()] for a in nf.factors],
        "inf": nf.inf,
        "sup": nf.sup,
        "len": nf.canonical_length,
    }


def _emit(args, record: dict, text: str) -> None:
    if args.format == "json-lines":
        print(json.dumps(record))
    else:
        print(text)


def cmd_normalize(args) -> int:
    w = words.parse_word(args.word, args.n)
    nf = normal.left_canonical_form(w)
    _emit(
        args,
        _nf_record(nf),
        normal.render_normal_form(nf)
        + f"\ninf={nf.inf} sup={nf.sup} len={nf.canonical_length}",
    )
    return EXIT_TRUE


def cmd_equal(args) -> int:
    v = words.parse_word(args.word1, args.n)
    w = words.parse_word(args.word2, args.n)
    verdict = normal.equal(v, w)
    _emit(args, {"verdict": verdict}, "true" if verdict else "false")
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_conjugate(args) -> int:
    v = words.parse_word(args.word1, args.n)
    w = words.parse_word(args.word2, args.n)
    rep_v, _ = conjugacy.summit_representative(
        normal.left_canonical_form(v), args.cap_cycling
    )
    rep_w, _ = conjugacy.summit_representative(
        normal.left_canonical_form(w), args.cap_cycling
    )
    verdict, cert = conjugacy.are_conjugate(
        v, w, sss_cap=args.cap_sss, cycling_cap=args.cap_cycling
    )
    record = {
        "verdict": verdict,
        "inf1": rep_v.inf, "sup1": rep_v.sup,
        "inf2": rep_w.inf, "sup2": rep_w.sup,
        "certificate": words.render_word(cert) if cert is not None else None,
    }
    lines = [
        "conjugate" if verdict else "not conjugate",
        f"summit invariants: ({rep_v.inf},{rep_v.sup}) vs ({rep_w.inf},{rep_w.sup})",
    ]
    if verdict:
        lines.append(f"certificate: {words.render_word(cert)}")
    _emit(args, record, "\n".join(lines))
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_sss(args) -> int:
    w = words.parse_word(args.word, args.n)
    sss, _ = conjugacy.super_summit_set(
        normal.left_canonical_form(w),
        cap=args.cap_sss,
        cycling_cap=args.cap_cycling,
    )
    stats = conjugacy.orbit_statistics(sss)
    record = {
        "inf": sss.inf,
        "sup": sss.sup,
        "cardinality": len(sss),
        "cycling_orbits": stats["cycling_orbits"],
        "decycling_orbits": stats["decycling_orbits"],
    }
    lines = [
        f"inf={sss.inf} sup={sss.sup} cardinality={len(sss)}",
        f"cycling orbits: {len(stats['cycling_orbits'])} sizes={stats['cycling_orbits']}",
        f"decycling orbits: {len(stats['decycling_orbits'])} sizes={stats['decycling_orbits']}",
    ]
    if args.elements:
        record["elements"] = [normal.render_normal_form(x) for x in sss]
        lines.extend(normal.render_normal_form(x) for x in sss)
    _emit(args, record, "\n".join(lines))
    return EXIT_TRUE


def cmd_factors(args) -> int:
    fs = factors.enumerate_factors(args.n)
    record = {
        "n": args.n,
        "count": len(fs),
        "factors": [factors.render_factor(a) for a in fs],
    }
    text = "\n".join(factors.render_factor(a) for a in fs) + f"\ncount={len(fs)}"
    _emit(args, record, text)
    return EXIT_TRUE


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    w = words.random_word(args.n, args.length, rng)
    _emit(args, {"word": words.render_word(w)}, words.render_word(w))
    return EXIT_TRUE


def cmd_verify(args) -> int:
    report = oracle.cancellation_check(args.n, args.bound)
    _emit(
        args,
        report,
        f"cancellation n={report['n']} bound={report['bound']}: "
        f"checked={report['checked']} counterexamples={len(report['counterexamples'])}",
    )
    return EXIT_TRUE if not report["counterexamples"] else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandbraid",
        description="Braid group computations in the band-generator presentation.",
    )
    parser.add_argument("-n", type=int, default=4, help="strand count (default 4)")
    parser.add_argument(
        "--format", choices=["text", "json-lines"], default="text"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap-sss", type=int, default=conjugacy.DEFAULT_SSS_CAP)
    parser.add_argument("--cap-bfs", type=int, default=oracle.DEFAULT_BFS_CAP)
    parser.add_argument(
        "--cap-cycling", type=int, default=conjugacy.DEFAULT_CYCLING_CAP
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="left-canonical form of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", help="word-problem decision")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("conjugate", help="conjugacy decision with certificate")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("sss", help="super summit set invariants")
    p.add_argument("word")
    p.add_argument("--elements", action="store_true", help="list all elements")
    p.set_defaults(func=cmd_sss)

    p = sub.add_parser("factors", help="list all canonical factors")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("random", help="seeded random word")
    p.add_argument("length", type=int)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="brute-force cancellation report")
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except BraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

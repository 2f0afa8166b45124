"""Command-line front end.

Exit codes: 0 pass, 1 property or acceptance failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .builder import build_q_word
from .core import (
    LassoWord,
    WordFormatError,
    build_full_streett,
    empty_word,
    pad_index,
    read_word,
    write_word,
)
from .dot import write_dot
from .lasso import check_witness, rabin_accepts, streett_accepts
from .rankings import (
    QRanking,
    count_q_rankings,
    enumerate_q_rankings,
    lower_bound_report,
    parse_ranking,
)
from .suite import DEFAULT_EXPONENTS, BudgetExceeded, CampaignConfig, emit_report, run_campaign
from .verifier import PathCapExceeded, default_path_cap, verify_q_word

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_ranking(path: str) -> QRanking:
    with open(path, encoding="utf-8") as fh:
        return parse_ranking(fh.read())


def _write_json(path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def cmd_gen(args) -> int:
    aut = build_full_streett(args.n, args.k)
    if args.all:
        budget = args.budget
        if count_q_rankings(args.n, args.k) > budget:
            raise UsageError(f"--all would generate more than {budget} words")
        rankings = list(enumerate_q_rankings(args.n, args.k))
    elif args.ranking:
        rankings = [parse_ranking(args.ranking)]
    else:
        raise UsageError("give --ranking or --all")
    os.makedirs(args.out_dir, exist_ok=True)
    for f in rankings:
        if (f.n, f.k) != (args.n, args.k):
            raise UsageError(f"ranking is for (n={f.n}, k={f.k}), not (n={args.n}, k={args.k})")
        stem = os.path.join(args.out_dir, f"qword_{f.digest()}")
        write_word(build_q_word(aut, f), stem + ".fsw")
        with open(stem + ".rank", "w", encoding="utf-8") as fh:
            fh.write(f.serialize() + "\n")
        print(stem + ".fsw")
    return EXIT_PASS


def cmd_verify(args) -> int:
    w = read_word(args.word)
    f = _read_ranking(args.ranking)
    if len(w) == 0:
        raise UsageError("empty word: property 3 is undefined")
    reports = verify_q_word(w, f, default_path_cap())
    for rep in reports:
        print(f"{rep.property}: {'holds' if rep.holds else 'FAILS'}")
        if not rep.holds:
            print(f"  counterexample: {json.dumps(rep.to_dict()['counterexample'], sort_keys=True)}")
    if args.report:
        _write_json(args.report, {"word": args.word, "ranking": f.serialize(),
                                  "properties": [r.to_dict() for r in reports]})
    return EXIT_PASS if all(r.holds for r in reports) else EXIT_FAIL


def cmd_lasso(args) -> int:
    period = read_word(args.period)
    prefix = read_word(args.prefix) if args.prefix else empty_word(period.n, period.k)
    aut = build_full_streett(period.n, period.k)
    if args.pad:
        aut = pad_index(aut, args.pad)
    lasso = LassoWord(prefix, period)
    check = streett_accepts if args.condition == "streett" else rabin_accepts
    verdict = check(aut, lasso)
    witness_ok = verdict.accepted and check_witness(aut, lasso, verdict)
    print(f"{args.condition}: {'accepted' if verdict.accepted else 'rejected'}")
    if verdict.accepted:
        print(f"  witness replays: {witness_ok}")
    if args.report:
        _write_json(args.report, {**verdict.to_dict(), "witness_replays": witness_ok})
    if verdict.accepted and not witness_ok:
        return EXIT_FAIL
    expected = args.expect == "accept"
    return EXIT_PASS if verdict.accepted == expected else EXIT_FAIL


def cmd_count(args) -> int:
    print(count_q_rankings(args.n, args.k))
    return EXIT_PASS


def cmd_bound(args) -> int:
    rep = lower_bound_report(args.n, args.k)
    print(json.dumps({**rep.to_dict(), "log2_ranking_count": round(rep.log2_count, 3)},
                     indent=1, sort_keys=True))
    return EXIT_PASS


def _exponent(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"exponent must look like 'a,b', got {text!r}")
    return a, b


def cmd_suite(args) -> int:
    sampling = args.sample is not None
    cfg = CampaignConfig(
        n=args.n,
        k=args.k,
        pair_policy="sample" if sampling else "all_pairs",
        sample_count=args.sample,
        seed=args.seed if sampling else None,
        repetition_exponents=tuple(args.exponents or DEFAULT_EXPONENTS),
        path_cap=default_path_cap(),
        enumeration_budget=args.budget,
        workers=args.workers,
    )
    rep = run_campaign(cfg)
    summary = rep.to_dict()
    for section, tally in summary["summary"].items():
        print(f"{section}: {tally['passed']}/{tally['total']} passed")
    print(f"lower bound: {rep.lower_bound_states} states")
    print(f"overall: {summary['overall']}")
    if args.report:
        emit_report(rep, args.report)
    return EXIT_PASS if rep.overall else EXIT_FAIL


def cmd_export_dot(args) -> int:
    w = read_word(args.word)
    write_dot(w, args.out)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streett-fool",
        description="Build and check Q-words for full Streett automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(p):
        p.add_argument("-n", type=int, required=True, help="number of Q states")
        p.add_argument("-k", type=int, required=True, help="index size")

    p = sub.add_parser("gen", help="write Q-word files")
    nk(p)
    p.add_argument("--ranking", help='e.g. "r=[2,1,3];h=[[1,2],[1,2],[2,1]]"')
    p.add_argument("--all", action="store_true", help="one word per Q-ranking")
    p.add_argument("--budget", type=int, default=10**5)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check the four path properties")
    p.add_argument("word")
    p.add_argument("ranking", help="ranking sidecar file")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lasso", help="decide acceptance of prefix.period^omega")
    p.add_argument("--prefix")
    p.add_argument("--period", required=True)
    p.add_argument("--condition", choices=("streett", "rabin"), default="streett")
    p.add_argument("--pad", type=int, help="pad the index with empty pairs up to this size")
    p.add_argument("--expect", choices=("accept", "reject"), default="accept")
    p.add_argument("--report")
    p.set_defaults(func=cmd_lasso)

    p = sub.add_parser("count", help="number of Q-rankings")
    nk(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bound", help="lower-bound arithmetic for an instance size")
    nk(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("suite", help="run the fooling-set campaign")
    nk(p)
    p.add_argument("--sample", type=int, help="check this many random ordered pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exponents", type=_exponent, nargs="+", metavar="A,B")
    p.add_argument("--budget", type=int, default=10**5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("export-dot", help="write a Graphviz file")
    p.add_argument("word")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, WordFormatError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PathCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

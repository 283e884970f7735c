"""Command-line front end.

Machine-readable JSON goes to stdout (or --out); a one-line-per-check human
summary goes to stderr. Exit codes: 0 all checks pass, 1 a verification
failed, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import analysis, automorphism, game, words
from .errors import ResourceLimitError

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoikernel",
        description="Finite-depth verification for the Hanoi towers group",
    )
    parser.add_argument("--out", help="write the JSON report to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run structural checks by id")
    verify.add_argument("ids", nargs="*", help="lemma ids, or 'all'")
    verify.add_argument("--depth", type=int, default=4)
    verify.add_argument("--slow", action="store_true")
    verify.add_argument("--list", action="store_true", help="list known ids")

    qtable = sub.add_parser("qtable", help="indices of rigid inside level stabilizers")
    qtable.add_argument("--n-max", type=int, default=2)
    qtable.add_argument("--depth", type=int, default=4)
    qtable.add_argument("--slow", action="store_true")

    kernel = sub.add_parser("kernel-report", help="the full rigid-kernel bookkeeping")
    kernel.add_argument("--n-max", type=int, default=2)
    kernel.add_argument("--depth", type=int, default=4)
    kernel.add_argument("--slow", action="store_true")

    relators = sub.add_parser("relators", help="check the defining relators")
    relators.add_argument("--max-tau", type=int, default=4)
    relators.add_argument("--depth", type=int, default=4)

    game_cmd = sub.add_parser("game", help="the disk-moving game")
    game_sub = game_cmd.add_subparsers(dest="game_command", required=True)
    act = game_sub.add_parser("act", help="apply a move to a state")
    act.add_argument("--state", required=True, help="comma-separated pegs, e.g. 2,1,3,2,2,1")
    act.add_argument("--move", required=True, choices=["a", "b", "c"])
    solve = game_sub.add_parser("solve", help="shortest solution word")
    solve.add_argument("--disks", type=int, required=True)

    export = sub.add_parser("export", help="export a word's portrait")
    export_sub = export.add_subparsers(dest="export_command", required=True)
    portrait = export_sub.add_parser("portrait")
    portrait.add_argument("word")
    portrait.add_argument("--depth", type=int, default=4)
    portrait.add_argument("--format", choices=["dot", "json"], default="json")

    return parser


def _emit(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _summary(results: list[dict]) -> None:
    for row in results:
        status = "pass" if row["pass"] else "FAIL"
        print(f"{status}  {row['id']}", file=sys.stderr)


def _report(command: str, params: dict, results: list[dict]) -> dict:
    return {
        "command": command,
        "params": params,
        "results": results,
        "pass": all(r["pass"] for r in results),
    }


def _run_verify(args) -> tuple[dict | None, int]:
    if args.list:
        for lemma in analysis.LEMMA_IDS:
            print(f"{lemma:11s} {analysis.LEMMA_STATEMENTS[lemma]}")
        return None, EXIT_PASS
    ids = list(args.ids)
    if not ids:
        print("error: give lemma ids or 'all' (see verify --list)", file=sys.stderr)
        return None, EXIT_USAGE
    if ids == ["all"]:
        ids = list(analysis.LEMMA_IDS)
    unknown = [i for i in ids if i not in analysis.LEMMA_IDS]
    if unknown:
        print(f"error: unknown lemma ids: {', '.join(unknown)}", file=sys.stderr)
        return None, EXIT_USAGE
    results = []
    for lemma in sorted(set(ids)):  # output order fixed by id
        report = analysis.verify_lemma(lemma, depth=args.depth, slow=args.slow)
        results.append(report.to_json_dict())
    params = {"depth": args.depth, "slow": args.slow}
    return _report("verify", params, results), None


def _run_qtable(args) -> tuple[dict | None, int]:
    results = []
    for n in range(1, args.n_max + 1):
        for depth in range(n + 1, args.depth + 1):
            computed = analysis.q_order(depth, n, slow=args.slow)
            expected = analysis.q_expected(n)
            results.append(
                {
                    "id": f"q({n},{depth})",
                    "computed": computed,
                    "expected": expected,
                    "pass": computed == expected,
                }
            )
    params = {"n_max": args.n_max, "depth": args.depth, "slow": args.slow}
    return _report("qtable", params, results), None


def _run_kernel_report(args) -> tuple[dict | None, int]:
    report = analysis.kernel_report(args.n_max, args.depth, slow=args.slow)
    data = report.to_json_dict()
    results = [
        {
            "id": f"gamma(1)",
            "computed": report.gamma1,
            "expected": 16,
            "pass": report.gamma1 == 16,
        }
    ]
    for row in report.rows:
        results.append(
            {
                "id": f"row n={row.n}",
                "computed": row.to_json_dict(),
                "expected": {"h(n,n+1)": 4, "q_stable": True},
                "pass": row.passed,
            }
        )
    results.append(
        {
            "id": "kernel",
            "computed": {"order": report.kernel_order, "type": report.kernel_type},
            "expected": {"order": 4, "type": "Klein four-group"},
            "pass": report.passed,
        }
    )
    out = _report("kernel-report", {"n_max": args.n_max, "depth": args.depth}, results)
    out["table"] = data
    return out, None


def _run_relators(args) -> tuple[dict | None, int]:
    results = []
    for name, word in words.relator_family(args.max_tau).items():
        ok = words.check_relator(word, args.depth)
        results.append(
            {
                "id": name,
                "computed": {"trivial": ok, "length": len(word)},
                "expected": {"trivial": True},
                "pass": ok,
            }
        )
    params = {"max_tau": args.max_tau, "depth": args.depth}
    return _report("relators", params, results), None


def _run_game(args) -> tuple[dict | None, int]:
    if args.game_command == "act":
        try:
            state = tuple(int(s) for s in args.state.split(","))
            game.check_state(state)
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return None, EXIT_USAGE
        result = game.apply_move(state, args.move)
        results = [
            {
                "id": f"act {args.move}",
                "computed": {
                    "state": ",".join(map(str, state)),
                    "result": ",".join(map(str, result)),
                },
                "expected": {},
                "pass": True,
            }
        ]
        return _report("game", {"move": args.move}, results), None
    word = game.solve(args.disks)
    results = [
        {
            "id": f"solve {args.disks}",
            "computed": {
                "word": word,
                "moves": list(word),
                "length": len(word),
            },
            "expected": {"length": 2**args.disks - 1},
            "pass": len(word) == 2**args.disks - 1,
        }
    ]
    return _report("game", {"disks": args.disks}, results), None


def _run_export(args) -> tuple[dict | None, int]:
    try:
        words.check_word(args.word)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return None, EXIT_USAGE
    portrait = words.evaluate(args.word, args.depth)
    if args.format == "dot":
        text = automorphism.to_dot(portrait)
        if args.out:
            with open(args.out, "w") as handle:
                handle.write(text + "\n")
        else:
            print(text)
        return None, EXIT_PASS
    _emit(automorphism.to_json_dict(portrait), args.out)
    return None, EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("LOGLEVEL", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code not in (0, None) else EXIT_PASS

    runners = {
        "verify": _run_verify,
        "qtable": _run_qtable,
        "kernel-report": _run_kernel_report,
        "relators": _run_relators,
        "game": _run_game,
        "export": _run_export,
    }
    try:
        report, code = runners[args.command](args)
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    if report is None:
        return code
    _emit(report, args.out)
    _summary(report["results"])
    return EXIT_PASS if report["pass"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

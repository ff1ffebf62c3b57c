"""Command line front end.

Every command reads matrices in the plain text format (one row per line of
0/1 characters, "-" for stdin) and prints either text or, with
``--format json``, one JSON object carrying ``"schema": 1``.

Exit codes: 0 success, 1 domain/precondition/structural error, 2 malformed
input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analytics, oracle
from .errors import MatrixFormatError, PatmatError, ResourceCapError
from .extremal import (
    LR,
    RL,
    classify_pattern,
    construct_312_maximal,
    construct_312_shadow,
    construct_canonical_identity_avoiding,
    crucial_and_corner_ones,
    decompose_Jn,
    formula_max_ones,
    greedy_saturate,
    parse_path,
    peel_zigzag_decomposition,
    random_lr_path,
    recognize_zigzag,
)
from .matrix import BinaryMatrix, PermutationPattern, contains_pattern, parse_matrix

SCHEMA = 1

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_FORMAT = 2
EXIT_CAP = 3


class Outcome:
    """What a command hands back: a JSON-able payload and its text rendering."""

    def __init__(self, payload: dict, text: str, exit_code: int = EXIT_OK):
        self.payload = payload
        self.text = text
        self.exit_code = exit_code


# input helpers ---------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}") from None


def _matrix(path: str) -> BinaryMatrix:
    return parse_matrix(_read(path))


def _pattern(word: str) -> PermutationPattern:
    return PermutationPattern.from_word(word)


def _path_cells(path) -> list[list[int]]:
    return [[p.row, p.col] for p in path.cells]


def _perm_list(pi) -> list[int]:
    return list(pi.values)


# commands ----------------------------------------------------------------------


def cmd_check(args) -> Outcome:
    sigma = _pattern(args.pattern)
    A = _matrix(args.matrix)
    hit = contains_pattern(A, sigma)
    return Outcome({"pattern": sigma.word(), "contains": hit}, "contains" if hit else "avoids")


def cmd_max_ones(args) -> Outcome:
    sigma = _pattern(args.pattern)
    value, status = formula_max_ones(args.m, args.n, sigma)
    if value is None:
        msg = f"no formula for {sigma.word()}: supported are 12...k, k1...(k-1) and their symmetric images"
        return Outcome({"pattern": sigma.word(), "error": msg}, msg, EXIT_DOMAIN)
    text = str(value) if status == "proven" else f"{value} (conjectured)"
    return Outcome({"pattern": sigma.word(), "m": args.m, "n": args.n, "value": value, "status": status}, text)


def cmd_construct(args) -> Outcome:
    sigma = _pattern(args.pattern)
    path = parse_path(_read(args.path)) if args.path else None
    if sigma.is_identity() and sigma.k >= 2:
        A = construct_canonical_identity_avoiding(args.m, args.n, sigma.k, base_path=path)
    elif sigma.values == (3, 1, 2):
        if path is None:
            path = random_lr_path(args.m, args.n, args.seed)
        if args.shadow:
            A = construct_312_shadow(args.m, args.n, path)
        else:
            A = construct_312_maximal(args.m, args.n, path, choice_seed=args.seed)
    else:
        msg = f"no construction for {sigma.word()}: use 12...k or 312"
        return Outcome({"pattern": sigma.word(), "error": msg}, msg, EXIT_DOMAIN)
    return Outcome({"pattern": sigma.word(), "matrix": A.render(), "ones": A.count_ones()}, A.render())


def cmd_saturate(args) -> Outcome:
    sigma = _pattern(args.pattern)
    A = greedy_saturate(_matrix(args.matrix), sigma, choice_seed=args.seed)
    return Outcome({"pattern": sigma.word(), "matrix": A.render(), "ones": A.count_ones()}, A.render())


def cmd_decompose(args) -> Outcome:
    paths = peel_zigzag_decomposition(_matrix(args.matrix), args.k)
    payload = {"paths": [_path_cells(p) for p in paths], "lengths": [len(p) for p in paths]}
    return Outcome(payload, "\n\n".join(p.render() for p in paths))


def cmd_recognize(args) -> Outcome:
    path = recognize_zigzag(_matrix(args.matrix))
    if path is None:
        return Outcome({"zigzag": False, "path": None}, "not a complete zigzag path")
    return Outcome({"zigzag": True, "path": _path_cells(path)}, path.render())


def cmd_crucial(args) -> Outcome:
    if not args.path:
        raise MatrixFormatError("crucial needs --path FILE with an LR path")
    crucial, corner = crucial_and_corner_ones(parse_path(_read(args.path)))
    payload = {"crucial": [list(p) for p in crucial], "corner": [list(p) for p in corner]}
    lines = [f"{a.row},{a.col} -> {b.row},{b.col}" for a, b in zip(crucial, corner)]
    return Outcome(payload, "\n".join(lines))


def cmd_decompose_jn(args) -> Outcome:
    perms = decompose_Jn(args.n)
    return Outcome(
        {"n": args.n, "permutations": [list(p.values) for p in perms]},
        "\n".join(",".join(map(str, p.values)) for p in perms),
    )


def cmd_permanent(args) -> Outcome:
    A = _matrix(args.matrix)
    if args.avoid is None:
        value = analytics.permanent(A)
        return Outcome({"value": value}, str(value))
    report = analytics.avoiding_permanent(A, _pattern(args.avoid), witnesses=args.witnesses)
    lines = [str(report.value)]
    if report.witnesses is not None:
        lines += [str(w) for w in report.witnesses]
    return Outcome({"pattern": args.avoid, **report.to_dict()}, "\n".join(lines))


def cmd_enumerate(args) -> Outcome:
    sigma = _pattern(args.pattern)
    perms = list(analytics.enumerate_avoiding(args.n, sigma))
    payload = {"n": args.n, "pattern": sigma.word(), "count": len(perms)}
    lines = [str(len(perms))]
    if args.witnesses:
        payload["permutations"] = [_perm_list(p) for p in perms]
        lines += [str(p) for p in perms]
    return Outcome(payload, "\n".join(lines))


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise MatrixFormatError(f"expected comma-separated integers, got {text!r}") from None


def cmd_extend(args) -> Outcome:
    sigma = _pattern(args.pattern)
    sub = _int_list(args.sub)
    pi = analytics.extend_avoiding(sub, args.n, sigma)
    payload = {"sub": sub, "n": args.n, "pattern": sigma.word(), "extension": _perm_list(pi) if pi else None}
    return Outcome(payload, str(pi) if pi else "no extension")


def cmd_support(args) -> Outcome:
    A = _matrix(args.matrix)
    payload = {
        "total_support": analytics.is_total_support(A),
        "fully_indecomposable": analytics.is_fully_indecomposable(A),
    }
    if args.avoid is not None:
        payload["permutation_avoiding"] = analytics.is_sigma_permutation_avoiding(A, _pattern(args.avoid))
    text = "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in payload.items())
    return Outcome(payload, text)


def _report_text(report: oracle.OracleReport) -> str:
    d = report.to_dict()
    lines = [f"{k}: {v}" for k, v in d.items() if k not in ("witness", "parameters")]
    lines.insert(0, "parameters: " + " ".join(f"{k}={v}" for k, v in d["parameters"].items()))
    if d["witness"] is not None:
        lines += ["witness:", d["witness"]]
    return "\n".join(lines)


def cmd_oracle(args) -> Outcome:
    sub = args.oracle_command
    if sub == "max-ones":
        report = oracle.brute_max_ones(args.m, args.n, _pattern(args.pattern))
    elif sub == "conjecture":
        report = oracle.check_conjecture_k1(args.m, args.n, args.k)
    elif sub == "membership":
        report = oracle.conjecture_membership(_matrix(args.matrix), args.k)
    elif sub == "permanent":
        candidate = _matrix(args.candidate) if args.candidate else None
        report = oracle.search_max_avoiding_permanent(args.n, _pattern(args.pattern), args.constraint, candidate)
    else:  # maximal
        sigma = _pattern(args.pattern)
        found = list(oracle.enumerate_maximal(args.m, args.n, sigma))
        counts = sorted({A.count_ones() for A in found})
        payload = {"m": args.m, "n": args.n, "pattern": sigma.word(), "count": len(found), "ones": counts}
        lines = [f"maximal matrices: {len(found)}", f"one-counts: {counts}"]
        if args.witnesses:
            payload["matrices"] = [A.render() for A in found]
            for A in found:
                lines += ["", A.render()]
        return Outcome(payload, "\n".join(lines))
    return Outcome({"report": report.to_dict()}, _report_text(report))


# parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--path", metavar="FILE")
    common.add_argument("--witnesses", action="store_true")

    parser = argparse.ArgumentParser(prog="patmat", description="Pattern-avoiding (0,1)-matrix toolkit.")
    subs = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = subs.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "does a matrix contain a pattern")
    p.add_argument("pattern")
    p.add_argument("matrix")

    p = add("max-ones", cmd_max_ones, "formula for the maximum number of ones")
    p.add_argument("pattern")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = add("construct", cmd_construct, "build a maximal avoiding matrix")
    p.add_argument("pattern")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--shadow", action="store_true", help="312 only: deterministic shadow construction")

    p = add("saturate", cmd_saturate, "greedily add ones while avoiding a pattern")
    p.add_argument("pattern")
    p.add_argument("matrix")

    p = add("decompose", cmd_decompose, "peel a maximum 12...k-avoiding matrix into zigzag paths")
    p.add_argument("matrix")
    p.add_argument("k", type=int)

    p = add("recognize", cmd_recognize, "is the matrix a complete RL zigzag path")
    p.add_argument("matrix")

    add("crucial", cmd_crucial, "crucial and corner cells of an LR path (--path FILE)")

    p = add("decompose-jn", cmd_decompose_jn, "split J_n into reverse-Grassmannian permutations")
    p.add_argument("n", type=int)

    p = add("permanent", cmd_permanent, "permanent, optionally restricted to avoiding permutations")
    p.add_argument("matrix")
    p.add_argument("--avoid", metavar="PATTERN")

    p = add("enumerate", cmd_enumerate, "count (or list, with --witnesses) avoiding permutations")
    p.add_argument("n", type=int)
    p.add_argument("pattern")

    p = add("extend", cmd_extend, "extend an avoiding sequence to an avoiding permutation")
    p.add_argument("sub", help="comma-separated values, e.g. 4,6,1")
    p.add_argument("n", type=int)
    p.add_argument("pattern")

    p = add("support", cmd_support, "total support and full indecomposability")
    p.add_argument("matrix")
    p.add_argument("--avoid", metavar="PATTERN", help="also test pattern-permutation-avoidance")

    p = add("oracle", cmd_oracle, "exhaustive searches")
    osubs = p.add_subparsers(dest="oracle_command", required=True)
    q = osubs.add_parser("max-ones", parents=[common])
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("pattern")
    q = osubs.add_parser("maximal", parents=[common])
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("pattern")
    q = osubs.add_parser("conjecture", parents=[common])
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    q = osubs.add_parser("membership", parents=[common])
    q.add_argument("matrix")
    q.add_argument("k", type=int)
    q = osubs.add_parser("permanent", parents=[common])
    q.add_argument("n", type=int)
    q.add_argument("pattern")
    q.add_argument("--constraint", choices=oracle.CONSTRAINTS, default="none")
    q.add_argument("--candidate", metavar="FILE")
    return parser


def _emit(args, outcome: Outcome, out) -> None:
    if args.format == "json":
        body = {"schema": SCHEMA, "command": args.command, **outcome.payload}
        out.write(json.dumps(body, sort_keys=True) + "\n")
    elif outcome.text:
        out.write(outcome.text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except MatrixFormatError as exc:
        code, msg = EXIT_FORMAT, str(exc)
    except ResourceCapError as exc:
        code, msg = EXIT_CAP, str(exc)
    except PatmatError as exc:
        code, msg = EXIT_DOMAIN, str(exc)
        pos = getattr(exc, "position", None)
        if pos is not None:
            msg += f" at {pos}"
    else:
        if outcome.exit_code:
            if args.format == "json":
                _emit(args, outcome, sys.stdout)
            print(f"patmat: {outcome.text}", file=sys.stderr)
        else:
            _emit(args, outcome, sys.stdout)
        return outcome.exit_code
    if getattr(args, "format", "text") == "json":
        err = {"schema": SCHEMA, "command": args.command, "error": msg, "exit_code": code}
        sys.stdout.write(json.dumps(err, sort_keys=True) + "\n")
    print(f"patmat: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

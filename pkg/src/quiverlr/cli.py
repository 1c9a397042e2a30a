"""Command line interface: ``quiverlr <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .factorseq import conjecture_check, factor_sequences, canonical_tableau_diagram, shape_counts
from .quiver import RankConditions, compute_P, occurrence_violations
from .schubert import (
    Permutation,
    assemble_schubert,
    quiver_coefficients,
    rank_conditions_of,
    schubert_oracle,
)
from .stanley import reduced_words, stanley_function
from .verify import suite

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _vars(text: str | None) -> tuple[int | None, int | None]:
    if text is None:
        return None, None
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"--vars expects N or N,M, got {text!r}") from None
    if len(parts) not in (1, 2) or any(p < 1 for p in parts):
        raise InputError(f"--vars expects positive N or N,M, got {text!r}")
    return parts[0], parts[-1]


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def cmd_stanley(args) -> int:
    F = stanley_function(_perm(args.perm))
    _emit(args, str(F), F.to_json())
    return EXIT_OK


def cmd_schubert(args) -> int:
    w = _perm(args.perm)
    nx, ny = _vars(args.vars)
    m = max(w.size, 2) - 1
    if (nx and nx < m) or (ny and ny < m):
        raise InputError(f"--vars must be at least m = {m} for w in S_{m + 1}")
    table = quiver_coefficients(w)
    lines = []
    for (a, b, lam), c in sorted(table.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1])):
        lines.append(f"{c:+d} a={list(a)} b={list(b)} s[{','.join(map(str, lam))}](x/y)")
    payload: dict = {
        "permutation": list(w.image),
        "terms": [
            {"a": list(a), "b": list(b), "lambda": list(lam), "coeff": c}
            for (a, b, lam), c in sorted(table.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
        ],
    }
    status = EXIT_OK
    if args.double:
        poly = assemble_schubert(w, nx, ny)
        oracle = schubert_oracle(w)
        match = poly == oracle
        lines.append(f"polynomial: {poly}")
        lines.append(f"oracle match: {match}")
        payload["polynomial"] = str(poly)
        payload["oracle_match"] = match
        status = EXIT_OK if match else EXIT_MISMATCH
    _emit(args, "\n".join(lines), payload)
    return status


def cmd_quiver(args) -> int:
    try:
        text = Path(args.rank_file).read_text() if args.rank_file != "-" else sys.stdin.read()
        r = RankConditions.from_text(text)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None
    bad = occurrence_violations(r)
    if bad:
        raise InputError("rank conditions cannot occur: " + "; ".join(bad))
    if r.n < 1:
        raise InputError("need at least one map (n >= 1)")
    P = compute_P(r)
    _emit(args, str(P), P.to_json())
    return EXIT_OK


def cmd_coeffs(args) -> int:
    table = quiver_coefficients(_perm(args.perm))
    rows = sorted(table.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
    text = "\n".join(
        f"c_w({','.join(map(str, a))}; {','.join(map(str, b))}; [{','.join(map(str, lam))}]) = {c}"
        for (a, b, lam), c in rows
    )
    payload = [{"a": list(a), "b": list(b), "lambda": list(lam), "coeff": c} for (a, b, lam), c in rows]
    _emit(args, text, payload)
    return EXIT_OK


def cmd_reduced_words(args) -> int:
    words = sorted(reduced_words(_perm(args.perm)))
    if args.list:
        _emit(args, "\n".join(" ".join(map(str, wd)) for wd in words), [list(wd) for wd in words])
    else:
        _emit(args, str(len(words)), len(words))
    return EXIT_OK


def cmd_factorseq(args) -> int:
    w = _perm(args.perm)
    r = rank_conditions_of(w)
    if args.check:
        report = conjecture_check(r)
        text = "\n".join(
            f"{[list(lam) for lam in key]}: factors={e['factor_count']} coeff={e['coefficient']}"
            f" {'ok' if e['match'] else 'MISMATCH'}"
            for key, e in sorted(report.entries.items())
        )
        _emit(args, text, report.to_json())
        if report.all_match or not report.proven_regime:
            return EXIT_OK
        return EXIT_MISMATCH
    counts = shape_counts(factor_sequences(canonical_tableau_diagram(r)))
    text = "\n".join(f"{[list(lam) for lam in key]}: {c}" for key, c in sorted(counts.items()))
    _emit(args, text, [{"shapes": [list(lam) for lam in k], "count": c} for k, c in sorted(counts.items())])
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    results = []
    for name, ok, detail in suite(args.suite):
        results.append({"check": name, "ok": ok, "detail": detail})
        failed += not ok
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else ""))
    if args.json:
        print(json.dumps({"suite": args.suite, "failed": failed, "results": results}))
    else:
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverlr", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stanley", help="Stanley symmetric function F_w in the Schur basis")
    p.add_argument("perm")
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("schubert", help="quiver expansion of the double Schubert polynomial")
    p.add_argument("perm")
    p.add_argument("--double", action="store_true", help="assemble the polynomial and compare with divided differences")
    p.add_argument("--vars", help="variable counts N or N,M")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("quiver", help="all quiver coefficients c_mu(r) for a rank-conditions file")
    p.add_argument("rank_file", help="path, or - for stdin")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("coeffs", help="table of c_w(a, b, lambda)")
    p.add_argument("perm")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("reduced-words", help="reduced words of w")
    p.add_argument("perm")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", help="print the number of words (default)")
    g.add_argument("--list", action="store_true", help="print every word")
    p.set_defaults(func=cmd_reduced_words)

    p = sub.add_parser("factorseq", help="factor-sequence counts by shape")
    p.add_argument("perm")
    p.add_argument("--check", action="store_true", help="compare with the quiver coefficients")
    p.set_defaults(func=cmd_factorseq)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["s3", "s4", "s5"], default="s3")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    # --json may appear after the subcommand as well
    argv = list(sys.argv[1:] if argv is None else argv)
    json_flag = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.json = json_flag
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: `looph <command> ...`."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Sequence

from . import algebra, combin, rep, rewrite
from .algebra import Element, Report
from .coeff import Scalar, parse_scalar
from .word import format_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# Scalar contexts


def _scalar_mode(text: str | None, default: str) -> tuple[str, Scalar | None]:
    text = text or default
    if text in ("t", "q"):
        return text, None
    if text.startswith("int:"):
        try:
            return "int", parse_scalar(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --scalar value {text!r}") from exc
    raise UsageError(f"--scalar must be t, q or int:VALUE, got {text!r}")


def _specialize_element(x: Element, mode: str, value: Scalar | None) -> tuple[Element, str]:
    if mode == "t":
        return x, "t"
    if mode == "q":
        return x.substitute(rep.T_IMAGE), "q"
    return x.substitute(value), "t"


# Output helpers


def _emit_rows(out, fmt: str, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    if fmt == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for r in rows:
            out.write(" ".join(str(x) for x in r) + "\n")


def _emit_report(out, fmt: str, report: Report, extra: dict | None = None) -> int:
    out.write(report.summary() + "\n")
    if fmt == "json":
        data = report.to_json()
        if extra:
            data.update(extra)
        out.write(json.dumps(data, indent=2, default=str) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["check", "ok"])
        for label, ok in report.checks:
            w.writerow([label, "PASS" if ok else "FAIL"])
    else:
        for label, ok in report.checks:
            out.write(f"  {'PASS' if ok else 'FAIL'} {label}\n")
        for note in report.notes:
            out.write(f"  note: {note}\n")
        for key, val in (extra or {}).items():
            out.write(f"  {key}: {val}\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def _emit_matrix(out, fmt: str, m: rep.QMatrix, var: str, value: Scalar | None) -> None:
    dense = m.to_dense()
    if value is not None:
        dense = [[v.substitute(value) for v in row] for row in dense]
    if fmt == "json":
        out.write(json.dumps([[v.to_json() for v in row] for row in dense]) + "\n")
    else:
        rows = [[v.format(var) for v in row] for row in dense]
        if fmt == "csv":
            csv.writer(out, lineterminator="\n").writerows(rows)
        else:
            for row in rows:
                out.write("[" + ", ".join(row) + "]\n")


def _need_n(args, low: int = 1, high: int | None = None) -> int:
    n = args.n
    if n is None:
        raise UsageError("-n is required")
    if n < low or (high is not None and n > high):
        bound = f"{low} <= n" + (f" <= {high}" if high is not None else "")
        raise UsageError(f"{args.command} needs {bound}, got n={n}")
    return n


# Commands


def cmd_normalize(args, out) -> int:
    n = _need_n(args, 2)
    mode, value = _scalar_mode(args.scalar, "t")
    x, var = _specialize_element(algebra.parse_element(n, args.expr), mode, value)
    _write_element(out, args.format, x, var)
    return EXIT_OK


def cmd_mul(args, out) -> int:
    n = _need_n(args, 2)
    mode, value = _scalar_mode(args.scalar, "t")
    prod = Element.one(n)
    for text in args.factors:
        prod = prod * algebra.parse_element(n, text)
    x, var = _specialize_element(prod, mode, value)
    _write_element(out, args.format, x, var)
    return EXIT_OK


def _write_element(out, fmt: str, x: Element, var: str) -> None:
    if fmt == "json":
        out.write(json.dumps(x.to_json()) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["word", "coeff"])
        for word, c in sorted(x.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            w.writerow([format_word(word), c.format(var)])
    else:
        out.write(x.format(var) + "\n")


def cmd_basis(args, out) -> int:
    n = _need_n(args, 1, 8)
    rows = [[k, format_word(w)] for k, w in enumerate(algebra.reduced_words(n))]
    _emit_rows(out, args.format, ["index", "word"], rows)
    return EXIT_OK


def cmd_dim(args, out) -> int:
    n = _need_n(args, 1, 8)
    d = algebra.dimension(n)
    if args.format == "json":
        out.write(json.dumps({"n": n, "dim": d}) + "\n")
    elif args.format == "csv":
        out.write(f"n,dim\n{n},{d}\n")
    else:
        out.write(f"{d}\n")
    return EXIT_OK


def cmd_dyck(args, out) -> int:
    if args.tilde:
        n = _need_n(args, 1, combin.MAX_TILDE_N)
        rows = [[p, q] for p, q in combin.tilde_dyck(n)]
        _emit_rows(out, args.format, ["lower", "upper"], rows)
    else:
        n = _need_n(args, 0, combin.MAX_DYCK_N)
        _emit_rows(out, args.format, ["path"], [[p] for p in combin.dyck_paths(n)])
    return EXIT_OK


def cmd_mdd(args, out) -> int:
    try:
        factors = combin.mdd_factors(args.path)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        out.write(json.dumps({"path": args.path, "factors": [list(f) for f in factors]}) + "\n")
    else:
        out.write("".join("(" + " ".join(f"s{i}" for i in f) + ")" for f in factors) + "\n")
    return EXIT_OK


def cmd_counts(args, out) -> int:
    top = _need_n(args, 1, 8)
    rows = []
    ok = True
    for n in range(1, top + 1):
        c = combin.counts(n)
        ok &= c.consistent
        rows.append([n, c.catalan, c.tilde, c.reduced, c.binom])
    _emit_rows(out, args.format, ["n", "catalan", "tilde_dyck", "reduced_words", "binomial"], rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rep_matrix(args, out) -> int:
    n = _need_n(args, 1, 6)
    mode, value = _scalar_mode(args.scalar, "q")
    if mode == "t":
        raise UsageError("matrices live over Q(q); use --scalar q or int:VALUE")
    target = args.target.strip()
    if target in rep.GENERATORS or target == "Kinv":
        m = rep.uq_action(target, n)
    else:
        try:
            algebra.parse_sigma_rho(target)
            m = rep.psi(target, n)
        except ValueError:
            m = rep.psi(algebra.parse_element(n, target))
    _emit_matrix(out, args.format, m, "q", value)
    return EXIT_OK


# verify


def _n_range(args, default: Sequence[int], high: int) -> list[int]:
    if args.n is not None:
        if not default[0] <= args.n <= high:
            raise UsageError(f"n must lie in {default[0]}..{high}")
        return [args.n]
    return list(default)


def verify_confluence(args, out) -> int:
    report = Report("confluence")
    conf = rewrite.local_confluence_report(args.max_len, args.window)
    report.record(f"local confluence ({conf.summary()})", conf.ok)
    report.notes.append("rule pairs met: " + ", ".join("/".join(p) for p in sorted(conf.rule_pairs)))
    for n in _n_range(args, [2, 3, 4, 5], 8):
        report.record(
            f"strategy consistency n={n}, {args.trials} trials",
            rewrite.strategy_consistency(n, args.trials, args.seed),
        )
    return _emit_report(out, args.format, report)


def verify_presentations(args, out) -> int:
    status = EXIT_OK
    for n in _n_range(args, [2, 3, 4, 5], 6):
        status = max(status, _emit_report(out, args.format, algebra.verify_presentation_map(n)))
    return max(status, _emit_report(out, args.format, algebra.verify_derivation_steps(3)))


def verify_schur_weyl(args, out) -> int:
    ns = _n_range(args, [2, 3, 4] + ([5] if args.opt_n5 else []), 5 if args.opt_n5 else 4)
    status = EXIT_OK
    for n in ns:
        status = max(status, _emit_report(out, args.format, rep.schur_weyl_report(n)))
    return status


def verify_structure(args, out) -> int:
    ns = _n_range(args, [2, 3, 4] + ([5] if args.opt_n5 else []), 5 if args.opt_n5 else 4)
    status = EXIT_OK
    for n in ns:
        report, record = rep.structure_report(n)
        status = max(status, _emit_report(out, args.format, report, record))
    return status


def verify_quotient(args, out) -> int:
    status = EXIT_OK
    for n in _n_range(args, [2, 3, 4], 5):
        status = max(status, _emit_report(out, args.format, algebra.verify_quotient(n, args.pairs, args.seed)))
    return status


def verify_hecke_hopf(args, out) -> int:
    status = EXIT_OK
    for n in _n_range(args, [3, 4], 5):
        status = max(status, _emit_report(out, args.format, algebra.verify_hecke_hopf(n)))
    return status


def verify_counts(args, out) -> int:
    report = Report("counts")
    for n in _n_range(args, list(range(1, 8)), 8):
        c = combin.counts(n)
        report.record(f"n={n}: tilde {c.tilde} = reduced {c.reduced} = C(2n-1,n) {c.binom}", c.consistent)
        if n <= 7:
            failures = list(combin.iter_roundtrip_failures(n))
            report.record(f"n={n}: phi round trips", not failures)
    return _emit_report(out, args.format, report)


VERIFIERS: dict[str, Callable] = {
    "confluence": verify_confluence,
    "presentations": verify_presentations,
    "schur-weyl": verify_schur_weyl,
    "structure": verify_structure,
    "quotient": verify_quotient,
    "hecke-hopf": verify_hecke_hopf,
    "counts": verify_counts,
}


def cmd_verify(args, out) -> int:
    if args.max_len < 2 or args.window < 1:
        raise UsageError("--max-len must be >= 2 and --window >= 1")
    if args.opt_n5 and args.what not in ("schur-weyl", "structure"):
        raise UsageError("--opt-n5 only applies to schur-weyl and structure")
    return VERIFIERS[args.what](args, out)


# export


def cmd_export(args, out) -> int:
    n = _need_n(args, 2, 5)
    if args.what == "mult-table":
        out.write(algebra.multiplication_table_csv(n))
    elif args.what == "basis":
        data = {"n": n, "basis": [format_word(w) for w in algebra.reduced_words(n)]}
        out.write(json.dumps(data, indent=2) + "\n")
    elif args.what in ("peirce", "cartan"):
        if n > 4 and not args.opt_n5:
            raise UsageError("structure data beyond n=4 needs --opt-n5")
        _, record = rep.structure_report(n)
        w = csv.writer(out, lineterminator="\n")
        w.writerows(record[args.what])
    return EXIT_OK


# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="number of strands")
    common.add_argument("--scalar", help="t, q or int:VALUE")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--cache", help="normal-form cache file (default: $LOOPH_CACHE)")

    parser = argparse.ArgumentParser(prog="looph", description="Loop Hecke algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("mul", parents=[common], help="product of expressions")
    p.add_argument("factors", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("basis", parents=[common], help="reduced-word basis")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("dim", parents=[common], help="dimension")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("dyck", parents=[common], help="Dyck paths or pairs")
    p.add_argument("--tilde", action="store_true", help="list nested pairs instead of paths")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("mdd", parents=[common], help="reduced word of a Dyck path")
    p.add_argument("path")
    p.set_defaults(func=cmd_mdd)

    p = sub.add_parser("counts", parents=[common], help="count table up to n")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("rep-matrix", parents=[common], help="matrix of a generator or element")
    p.add_argument("target", help="E, F, K1, K2, K, a sigma/rho word, or an element")
    p.set_defaults(func=cmd_rep_matrix)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("what", choices=sorted(VERIFIERS))
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--opt-n5", action="store_true", help="include n=5 where optional")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="export tables")
    p.add_argument("what", choices=["mult-table", "basis", "peirce", "cartan"])
    p.add_argument("--opt-n5", action="store_true")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    rewrite.enable_cache(args.cache)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"looph: error: {exc}\n")
        return EXIT_USAGE
    finally:
        rewrite.flush_cache()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

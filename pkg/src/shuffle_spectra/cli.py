"""Command-line interface.

Every computation in the package is reachable from here: spectrum tables,
per-word eigenvalues, transition matrices, eigenbases, kernels, Schur
expansions, Laplacians, and a self-contained verification run that checks
the predicted spectra against brute-force characteristic polynomials.

Exit codes: 0 on success, 1 when a verification run finds a mismatch, 2 on
usage errors.  The environment variable R2R_MAX_N (default 6) caps the size
of brute-force verification runs.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .combinatorics import partitions_of, standard_tableaux
from .frobenius import frobenius_of_eigenspace
from .injective import laplacian, laplacian_spectrum
from .lifting import eigenbasis, eigenbasis_for_evaluation, kernel_basis
from .spectrum import SpectrumReport, eig_word_trace, spectrum_for_evaluation
from .words import (
    r2r,
    transition_matrix,
    word_from_text,
    word_to_text,
)

SCHEMA_PREFIX = "shuffle-spectra"


def _parse_evaluation(text: str, parser: argparse.ArgumentParser, option: str):
    counts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            parser.error(f"{option}: bad token {token!r} in {text!r}")
        counts.append(int(token))
    if sum(counts) == 0:
        parser.error(f"{option}: evaluation {text!r} describes no letters")
    return tuple(counts)


def _parse_partition(text: str, parser: argparse.ArgumentParser, option: str):
    parts = _parse_evaluation(text, parser, option)
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        parser.error(f"{option}: parts must be weakly decreasing and positive in {text!r}")
    return parts


def _partition_text(p) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def _strip_text(outer, inner) -> str:
    return f"{_partition_text(outer)}/{_partition_text(inner)}"


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


# -- eigenvalues ----------------------------------------------------------


def _spectrum_rows(report: SpectrumReport, probability: bool) -> list[list[str]]:
    n2 = report.size**2
    rows = []
    for e in report.entries:
        if e.multiplicity == 0:
            continue
        value = str(Fraction(e.eig, n2)) if probability and n2 else str(e.eig)
        rows.append(
            [
                _strip_text(e.outer, e.inner),
                str(e.desarrangements),
                str(e.kostka),
                str(e.multiplicity),
                str(e.outer_binomial),
                str(e.inner_binomial),
                str(e.diag),
                value,
            ]
        )
    return rows


def _spectrum_headers(report: SpectrumReport) -> list[str]:
    is_permutations = report.partition == (1,) * report.size
    return [
        "lambda/mu",
        "d^mu",
        "f^lambda" if is_permutations else "K",
        "mult",
        "C(|lambda|+1,2)",
        "C(|mu|+1,2)",
        "diag",
        "eig",
    ]


def _spectrum_json(report: SpectrumReport, probability: bool) -> dict:
    n2 = report.size**2
    entries = []
    for e in report.entries:
        if e.multiplicity == 0:
            continue
        entries.append(
            {
                "outer": list(e.outer),
                "inner": list(e.inner),
                "desarrangements": e.desarrangements,
                "kostka": e.kostka,
                "multiplicity": e.multiplicity,
                "outer_binomial": e.outer_binomial,
                "inner_binomial": e.inner_binomial,
                "diag": e.diag,
                "eig": str(Fraction(e.eig, n2)) if probability and n2 else e.eig,
            }
        )
    return {
        "schema": f"{SCHEMA_PREFIX}/spectrum/1",
        "evaluation": list(report.evaluation),
        "partition": list(report.partition),
        "dimension": report.dimension,
        "totals": {str(k): v for k, v in sorted(report.totals.items(), reverse=True)},
        "entries": entries,
    }


def _emit_spectrum(report: SpectrumReport, fmt: str, probability: bool, out) -> None:
    if fmt == "json":
        json.dump(_spectrum_json(report, probability), out, indent=2)
        out.write("\n")
        return
    rows = _spectrum_rows(report, probability)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        fields = [
            "outer",
            "inner",
            "desarrangements",
            "kostka",
            "multiplicity",
            "outer_binomial",
            "inner_binomial",
            "diag",
            "eig",
        ]
        writer.writerow(fields)
        for row in rows:
            outer, inner = row[0].split("/")
            writer.writerow([outer, inner] + row[1:])
        return
    out.write(f"evaluation {_partition_text(report.evaluation)}")
    out.write(f"  (n = {report.size}, dimension {report.dimension})\n")
    out.write(_render_table(_spectrum_headers(report), rows))
    out.write("\n")


def cmd_eigenvalues(args, parser) -> int:
    if args.evaluation is None and args.n is None:
        parser.error("eigenvalues: provide --n or --evaluation")
    out = sys.stdout
    if args.evaluation is not None:
        evaluation = _parse_evaluation(args.evaluation, parser, "--evaluation")
        _emit_spectrum(spectrum_for_evaluation(evaluation), args.format, args.probability, out)
        return 0
    reports = [spectrum_for_evaluation(nu) for nu in partitions_of(args.n)]
    if args.format == "json":
        payload = {
            "schema": f"{SCHEMA_PREFIX}/spectrum-family/1",
            "n": args.n,
            "tables": [_spectrum_json(r, args.probability) for r in reports],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
        return 0
    for i, report in enumerate(reports):
        if i:
            out.write("\n")
        _emit_spectrum(report, args.format, args.probability, out)
    return 0


# -- eig-word -------------------------------------------------------------


def cmd_eig_word(args, parser) -> int:
    try:
        word = word_from_text(args.word) if args.word else ()
    except ValueError as exc:
        parser.error(f"eig-word: {exc}")
    trace = eig_word_trace(word)
    if args.format == "json":
        payload = {
            "schema": f"{SCHEMA_PREFIX}/eig-word/1",
            "word": word_to_text(trace.word),
            "suffix": word_to_text(trace.suffix),
            "shape": list(trace.shape),
            "suffix_shape": list(trace.suffix_shape),
            "head": trace.head,
            "tail": trace.tail,
            "eig": trace.eig,
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    n, s = len(trace.word), len(trace.suffix)
    head_binom = n * (n + 1) // 2
    tail_binom = s * (s + 1) // 2
    print(f"word    {word_to_text(trace.word) if trace.word else '-'}")
    print(f"suffix  {word_to_text(trace.suffix) if trace.suffix else '-'}")
    print(f"shapes  {_partition_text(trace.shape)} / {_partition_text(trace.suffix_shape)}")
    print(
        f"eig     [{head_binom} + {trace.head - head_binom}]"
        f" - [{tail_binom} + {trace.tail - tail_binom}] = {trace.eig}"
    )
    return 0


# -- transition matrices --------------------------------------------------


def cmd_transition_matrix(args, parser) -> int:
    evaluation = _parse_evaluation(args.evaluation, parser, "--evaluation")
    tm = transition_matrix(args.shuffle, evaluation)
    if args.format == "json":
        json.dump(tm.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    labels = [word_to_text(w) for w in tm.order]
    headers = [f"{args.shuffle} x {tm.scale}"] + labels
    rows = [
        [labels[i]] + [str(int(x)) for x in tm.counts.row(i)]
        for i in range(len(labels))
    ]
    print(_render_table(headers, rows))
    return 0


# -- eigenbasis and kernel ------------------------------------------------


def cmd_eigenbasis(args, parser) -> int:
    if (args.partition is None) == (args.evaluation is None):
        parser.error("eigenbasis: provide exactly one of --partition / --evaluation")
    if args.partition is not None:
        shape = _parse_partition(args.partition, parser, "--partition")
        entries = eigenbasis(shape)
        if args.verify:
            for entry in entries:
                for v in entry.vectors:
                    if r2r(v) != entry.eigenvalue * v:
                        print(
                            f"verification failed for {_strip_text(entry.outer, entry.inner)}",
                            file=sys.stderr,
                        )
                        return 1
        payload = {
            "schema": f"{SCHEMA_PREFIX}/eigenbasis/1",
            "partition": list(shape),
            "dimension": len(standard_tableaux(shape)),
            "entries": [e.to_json() for e in entries],
        }
    else:
        evaluation = _parse_evaluation(args.evaluation, parser, "--evaluation")
        pairs = eigenbasis_for_evaluation(evaluation)
        if args.verify:
            for _, entry in pairs:
                for v in entry.vectors:
                    if r2r(v) != entry.eigenvalue * v:
                        print("verification failed", file=sys.stderr)
                        return 1
        payload = {
            "schema": f"{SCHEMA_PREFIX}/eigenbasis-evaluation/1",
            "evaluation": list(evaluation),
            "entries": [
                {"embedding": [list(row) for row in tab], **entry.to_json()}
                for tab, entry in pairs
            ],
        }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_kernel(args, parser) -> int:
    shape = _parse_partition(args.partition, parser, "--partition")
    basis = kernel_basis(shape)
    payload = {
        "schema": f"{SCHEMA_PREFIX}/kernel/1",
        "partition": list(shape),
        "dimension": len(basis),
        "vectors": [v.to_json() for v in basis],
    }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


# -- frobenius ------------------------------------------------------------


def cmd_frobenius(args, parser) -> int:
    if args.n < 0 or args.eigenvalue < 0:
        parser.error("frobenius: --n and --eigenvalue must be non-negative")
    expansion = frobenius_of_eigenspace(args.n, args.eigenvalue)
    if args.format == "json":
        payload = {
            "schema": f"{SCHEMA_PREFIX}/frobenius/1",
            "n": args.n,
            "eigenvalue": args.eigenvalue,
            "dimension": expansion.dimension(),
            "terms": expansion.to_json(),
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    print(expansion)
    return 0


# -- laplacian ------------------------------------------------------------


def cmd_laplacian(args, parser) -> int:
    if not 0 <= args.r <= args.n:
        parser.error(f"laplacian: need 0 <= r <= n, got r={args.r}, n={args.n}")
    if args.spectrum:
        spectrum = laplacian_spectrum(args.n, args.r)
        payload = {
            "schema": f"{SCHEMA_PREFIX}/laplacian-spectrum/1",
            "n": args.n,
            "r": args.r,
            "spectrum": {str(k): v for k, v in sorted(spectrum.items(), reverse=True)},
        }
    else:
        matrix = laplacian(args.n, args.r)
        payload = {
            "schema": f"{SCHEMA_PREFIX}/laplacian/1",
            "n": args.n,
            "r": args.r,
            "entries": [[int(x) for x in row] for row in matrix.data],
        }
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


# -- verify ---------------------------------------------------------------


def _verify_size(n: int, failures: list[str]) -> None:
    from .linalg import IntPolynomial

    for nu in partitions_of(n):
        report = spectrum_for_evaluation(nu)
        tm = transition_matrix("r2r", nu)
        actual = tm.counts.charpoly()
        predicted = IntPolynomial.from_integer_roots(report.totals)
        if actual != predicted:
            failures.append(
                f"charpoly mismatch on evaluation {nu}: predicted roots {report.totals}"
            )
    for shape in partitions_of(n):
        kernel = kernel_basis(shape)  # raises on dimension mismatch
        del kernel
        entries = eigenbasis(shape)  # verifies each eigen-equation internally
        got = {}
        for e in entries:
            got[e.eigenvalue] = got.get(e.eigenvalue, 0) + len(e.vectors)
        want = {}
        for e in spectrum_for_evaluation(shape).entries:
            if e.outer == shape and e.multiplicity:
                want[e.eig] = want.get(e.eig, 0) + e.desarrangements
        if got != want:
            failures.append(f"eigenbasis of {shape}: {got} != predicted {want}")


def cmd_verify(args, parser) -> int:
    cap = int(os.environ.get("R2R_MAX_N", "6"))
    if args.n > cap:
        parser.error(
            f"verify: n={args.n} exceeds the brute-force cap {cap}; raise R2R_MAX_N to override"
        )
    failures: list[str] = []
    try:
        _verify_size(args.n, failures)
    except AssertionError as exc:
        failures.append(str(exc))
    if failures:
        print(f"verify n={args.n}: FAIL")
        for line in failures:
            print(f"  mismatch: {line}")
        return 1
    print(f"verify n={args.n}: OK")
    print(f"  charpoly factorizations match for all {len(partitions_of(args.n))} evaluations")
    print("  eigenbasis eigen-equations and kernel dimensions check out")
    return 0


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shuffle-spectra",
        description="Exact spectra and eigenbases of random-to-random shuffles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigenvalues", help="spectrum tables indexed by horizontal strips")
    p.add_argument("--n", type=int, help="emit one table per partition of n")
    p.add_argument("--evaluation", help="comma-separated evaluation, e.g. 2,2")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument(
        "--probability",
        action="store_true",
        help="report exact probability eigenvalues eig/n^2 instead of integers",
    )
    p.set_defaults(func=cmd_eigenvalues)

    p = sub.add_parser("eig-word", help="eigenvalue attached to one word")
    p.add_argument("word", nargs="?", default="", help="digits or letters, e.g. 234133134")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_eig_word)

    p = sub.add_parser("transition-matrix", help="one-step transition matrix")
    p.add_argument("--shuffle", choices=("r2r", "r2t", "t2r"), required=True)
    p.add_argument("--evaluation", required=True)
    p.add_argument("--format", choices=("table", "json"), default="json")
    p.set_defaults(func=cmd_transition_matrix)

    p = sub.add_parser("eigenbasis", help="explicit eigenbasis of a Specht module or word space")
    p.add_argument("--partition")
    p.add_argument("--evaluation")
    p.add_argument("--verify", action="store_true", help="re-check every eigen-equation")
    p.set_defaults(func=cmd_eigenbasis)

    p = sub.add_parser("kernel", help="kernel basis of a Specht module")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("frobenius", help="Schur expansion of an eigenspace on permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eigenvalue", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("laplacian", help="Laplacian of the complex of injective words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--spectrum", action="store_true", help="emit the integer spectrum instead")
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("verify", help="run the brute-force oracle suite at one size")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())

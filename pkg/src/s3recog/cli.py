"""Command-line interface.

Exit codes: 0 decided / success, 1 input error, 2 inconclusive (budget
exhausted), 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .abelian import abelianization
from .dimension import InternalInconsistencyError, cross_check, hilbert_series, leading_term_ideal
from .groebner import DEFAULT_MAX_PAIRS, DEFAULT_MAX_SECONDS, STRATEGIES, BudgetExhausted, Ideal, buchberger
from .polycore import MonomialOrder, PolynomialSyntaxError, format_ideal_file, parse_ideal_file
from .presentation import (
    PresentationSyntaxError,
    parse_heegaard,
    parse_presentation,
    presentation_from_heegaard,
)
from .recognizer import PipelineAnomalyError, RecognizerConfig, recognize
from .repvar import representation_ideal

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_presentation(path: str, heegaard: bool):
    text = _read(path)
    if heegaard:
        return presentation_from_heegaard(parse_heegaard(text)), text.strip()
    return parse_presentation(text), None


def _budget_args(sub: argparse.ArgumentParser):
    sub.add_argument("--order", default="grevlex", choices=[o.value for o in MonomialOrder])
    sub.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS)
    sub.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    sub.add_argument("--strategy", default="normal", choices=STRATEGIES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="s3recog",
        description="Trivial-group / 3-sphere recognition via SL(2,C) representation varieties.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    rec = subs.add_parser("recognize", help="run the full decision pipeline")
    rec.add_argument("file")
    rec.add_argument("--heegaard", action="store_true", help="input is a Heegaard diagram")
    rec.add_argument("--json", action="store_true", help="print the JSON verdict")
    rec.add_argument(
        "--force-dimension",
        action="store_true",
        help="compute the dimension even when the abelianization already decides",
    )
    _budget_args(rec)

    ab = subs.add_parser("abelianize", help="abelianization of a presentation")
    ab.add_argument("file")
    ab.add_argument("--heegaard", action="store_true")

    emit = subs.add_parser("emit-ideal", help="write the representation-variety equations")
    emit.add_argument("file")
    emit.add_argument("-o", "--output", default="-")
    emit.add_argument("--heegaard", action="store_true")

    gb = subs.add_parser("groebner", help="reduced Groebner basis of an ideal file")
    gb.add_argument("file")
    _budget_args(gb)

    dim = subs.add_parser("dim", help="Krull dimension of the variety of an ideal file")
    dim.add_argument("file")
    dim.add_argument("--verbose", action="store_true", help="also print witness and Hilbert data")
    _budget_args(dim)
    return parser


def _cmd_recognize(args) -> int:
    p, heegaard_text = _load_presentation(args.file, args.heegaard)
    config = RecognizerConfig(
        order=MonomialOrder.parse(args.order),
        max_pairs=args.max_pairs,
        max_seconds=args.max_seconds,
        strategy=args.strategy,
        force_dimension=args.force_dimension,
    )
    description = heegaard_text if heegaard_text is not None else str(p)
    try:
        verdict = recognize(p, config, description)
    except PipelineAnomalyError as exc:
        print(exc.verdict.to_json() if args.json else exc.verdict.summary())
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(verdict.to_json(), end="") if args.json else print(verdict.summary())
    return EXIT_OK if verdict.is_decided else EXIT_INCONCLUSIVE


def _cmd_abelianize(args) -> int:
    p, _ = _load_presentation(args.file, args.heegaard)
    ab = abelianization(p)
    print(f"free rank: {ab.free_rank}")
    print(f"torsion: {list(ab.torsion)}")
    print("trivial" if ab.is_trivial else "nontrivial")
    return EXIT_OK


def _cmd_emit(args) -> int:
    p, _ = _load_presentation(args.file, args.heegaard)
    rep = representation_ideal(p)
    text = format_ideal_file(rep.names, rep.ideal.generators)
    header = f"# {rep.equation_count} equations (4m+n with m={p.m}, n={p.n}); {len(rep.purged)} tautologies purged\n"
    if args.output == "-":
        sys.stdout.write(header + text)
    else:
        Path(args.output).write_text(header + text, encoding="utf-8")
    return EXIT_OK


def _load_ideal(args) -> tuple[list[str], Ideal]:
    names, polys = parse_ideal_file(_read(args.file))
    return names, Ideal(tuple(polys), len(names), MonomialOrder.parse(args.order))


def _cmd_groebner(args) -> int:
    names, ideal = _load_ideal(args)
    try:
        basis = buchberger(
            ideal, strategy=args.strategy, max_pairs=args.max_pairs, max_seconds=args.max_seconds
        )
    except BudgetExhausted as exc:
        print(f"inconclusive: {exc} ({exc.stats.as_dict()})", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    sys.stdout.write(format_ideal_file(names, basis.elements, ideal.order))
    return EXIT_OK


def _cmd_dim(args) -> int:
    names, ideal = _load_ideal(args)
    try:
        basis = buchberger(
            ideal, strategy=args.strategy, max_pairs=args.max_pairs, max_seconds=args.max_seconds
        )
    except BudgetExhausted as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    report = cross_check(basis)
    print(report.dimension)
    if args.verbose:
        hs = hilbert_series(leading_term_ideal(basis))
        print(f"witness: {[names[i] for i in report.witness]}")
        print(f"hilbert numerator: {list(hs.numerator)} / (1-t)^{hs.nvars}")
        print(f"hilbert degree: {hs.hilbert_degree}")
    return EXIT_OK


COMMANDS = {
    "recognize": _cmd_recognize,
    "abelianize": _cmd_abelianize,
    "emit-ideal": _cmd_emit,
    "groebner": _cmd_groebner,
    "dim": _cmd_dim,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, PresentationSyntaxError, PolynomialSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

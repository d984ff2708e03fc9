import logging
from argparse import ArgumentParser, Namespace, _SubParsersAction
from dataclasses import replace
from pathlib import Path

from satvec import conf
from satvec.cli.stats import print_system_summary
from satvec.constraint_gen import DEFAULT_WIDTHS, SENTENCE_WIDTHS, Widths
from satvec.constraint_system import build_system
from satvec.exceptions import IllegalArgumentException
from satvec.formats import clause_signature, sentence_signature
from satvec.signature import Signature, signature_from_text

logger = logging.getLogger(__name__)

SENTENCES_PRESET = "sentences"
CLAUSES_PRESET = "clauses"


def _signature(args: Namespace) -> Signature:
    if args.sig is not None:
        return signature_from_text(Path(args.sig).read_text(encoding="utf-8"))
    if args.preset == SENTENCES_PRESET:
        return sentence_signature(args.vocabulary, args.max_length)
    if args.preset == CLAUSES_PRESET:
        return clause_signature()
    raise IllegalArgumentException("Either --sig or --preset is required")


def _widths(args: Namespace) -> Widths:
    widths = SENTENCE_WIDTHS if args.preset == SENTENCES_PRESET else DEFAULT_WIDTHS
    overrides = {
        "ordered": args.w_ord,
        "unordered": args.w_unord,
        "parent": args.w_par,
        "parent_cells": args.w_par_cells,
        "sequence": args.w_seq,
    }
    return replace(widths, **{name: value for name, value in overrides.items() if value is not None})


def run(args: Namespace) -> int:
    system = build_system(_signature(args), _widths(args), args.t, args.seed)
    system.save(args.out)
    print_system_summary(system)
    print(f"Wrote {args.out}")
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("gen", help="Generate and save a constraint system")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--sig", type=Path, help="Signature file")
    source.add_argument("--preset", choices=[SENTENCES_PRESET, CLAUSES_PRESET], help="Built-in signature")
    parser.add_argument("--vocabulary", type=int, default=conf.SENTENCE_VOCABULARY)
    parser.add_argument("--max-length", type=int, default=conf.SENTENCE_MAX_LENGTH)
    parser.add_argument("--w-ord", type=int, default=None)
    parser.add_argument("--w-unord", type=int, default=None)
    parser.add_argument("--w-par", type=int, default=None, help="0 disables parent constraints")
    parser.add_argument("--w-par-cells", type=int, default=None)
    parser.add_argument("--w-seq", type=int, default=None)
    parser.add_argument("--t", type=int, default=1, help="Number of parallel constraint sets")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path, required=True)
    parser.set_defaults(func=run)

from argparse import ArgumentParser, Namespace, _SubParsersAction
from pathlib import Path

from satvec.cli.options import add_decode_arguments, add_system_argument, decode_options, default_budget, open_system
from satvec.experiments.corpus import codec_for, read_corpus
from satvec.experiments.roundtrip import RoundtripOptions, roundtrip
from satvec.formats_impl.clauses import PLACEHOLDERS, SINGLE


def run(args: Namespace) -> int:
    system = open_system(args)
    items = read_corpus(args.corpus)
    budget = args.budget if args.budget is not None else default_budget(system)
    options = RoundtripOptions(
        budget_seconds=budget,
        verify=args.verify,
        workers=args.workers,
        decode_options=decode_options(args, budget),
        progress=not args.no_progress,
    )
    report = roundtrip(items, system, options, codec_for(system, args.variables))
    report.display()
    if args.report_json is not None:
        args.report_json.write_text(report.to_json(), encoding="utf-8")
        print(f"Wrote {args.report_json}")
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("roundtrip", help="Encode and decode every item of a corpus")
    add_system_argument(parser)
    parser.add_argument("--corpus", type=Path, required=True, help="One item per line, or a TPTP file")
    add_decode_arguments(parser)
    parser.add_argument("--variables", choices=[PLACEHOLDERS, SINGLE], default=PLACEHOLDERS)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--report-json", type=Path, default=None)
    parser.add_argument("--no-progress", action="store_true")
    parser.set_defaults(func=run)

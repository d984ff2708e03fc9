from argparse import ArgumentParser, Namespace, _SubParsersAction
from pathlib import Path
from typing import List, Tuple

from satvec.cli.options import add_system_argument, open_system
from satvec.exceptions import IllegalArgumentException
from satvec.experiments.categorization import DEFAULT_LAMBDAS, CategorizationOptions, categorize
from satvec.experiments.corpus import read_corpus, read_labels
from satvec.formats import synthetic_clause_corpus


def _corpus(args: Namespace) -> Tuple[List[str], List[str]]:
    if args.synthetic is not None:
        corpus = synthetic_clause_corpus(args.classes, args.synthetic, args.seed)
        return [text for text, _ in corpus], [str(label) for _, label in corpus]
    if args.corpus is None or args.labels is None:
        raise IllegalArgumentException("--corpus and --labels are required unless --synthetic is given")
    return read_corpus(args.corpus), read_labels(args.labels)


def run(args: Namespace) -> int:
    system = open_system(args)
    items, labels = _corpus(args)
    options = CategorizationOptions(
        lambdas=tuple(args.lambdas),
        folds=args.folds,
        seed=args.seed,
        ts=tuple(args.t) if args.t else None,
        k=args.k,
        progress=not args.no_progress,
    )
    report = categorize(items, labels, system, options)
    report.display()
    if args.report_json is not None:
        args.report_json.write_text(report.to_json(), encoding="utf-8")
        print(f"Wrote {args.report_json}")
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("knn", help="Cross-validated nearest-neighbour categorization")
    add_system_argument(parser)
    parser.add_argument("--corpus", type=Path, default=None)
    parser.add_argument("--labels", type=Path, default=None, help="One label per corpus item")
    parser.add_argument("--synthetic", type=int, default=None, help="Use a synthetic clause corpus of this size")
    parser.add_argument("--classes", type=int, default=5, help="Number of classes of the synthetic corpus")
    parser.add_argument("--lambda", dest="lambdas", type=float, nargs="+", default=list(DEFAULT_LAMBDAS))
    parser.add_argument("--folds", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--t", type=int, nargs="+", default=None, help="Numbers of parallel sets to evaluate")
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--report-json", type=Path, default=None)
    parser.add_argument("--no-progress", action="store_true")
    parser.set_defaults(func=run)

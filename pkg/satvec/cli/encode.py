import logging
from argparse import ArgumentParser, Namespace, _SubParsersAction
from pathlib import Path

from satvec.cli.options import add_system_argument, open_system
from satvec.encoder import encode
from satvec.experiments.corpus import codec_for
from satvec.formats_impl.clauses import PLACEHOLDERS, SINGLE

logger = logging.getLogger(__name__)


def run(args: Namespace) -> int:
    system = open_system(args)
    codec = codec_for(system, args.variables)
    vector = encode(codec.to_graph(args.item), system)
    if args.keep_bindings and codec.binder.bindings != system.bindings:
        system.with_bindings(codec.binder.bindings).save(args.system)
        logger.info("Stored the new placeholder bindings in %s", args.system)
    if args.out is not None:
        args.out.write_text(vector.to_text(), encoding="utf-8")
        print(f"Wrote {args.out}")
    else:
        print(vector.to_text(), end="")
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("encode", help="Print the count vector of one item")
    add_system_argument(parser)
    parser.add_argument("--item", required=True, help="A sentence or a clause, depending on the system")
    parser.add_argument("--variables", choices=[PLACEHOLDERS, SINGLE], default=PLACEHOLDERS)
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument(
        "--keep-bindings", action="store_true", help="Store new placeholder bindings in the system file"
    )
    parser.set_defaults(func=run)

from argparse import ArgumentParser, Namespace, _SubParsersAction
from pathlib import Path

from satvec.cli.options import add_decode_arguments, add_system_argument, decode_options, open_system
from satvec.decoder import Decoder, write_dimacs
from satvec.exceptions import IllegalArgumentException
from satvec.experiments.corpus import codec_for
from satvec.graph import Graph, canonical_text
from satvec.units import seconds_to_human_readable
from satvec.vectors import vector_from_text


def _text(graph: Graph, args: Namespace, codec) -> str:
    if args.raw:
        return canonical_text(graph)
    try:
        return codec.to_text(graph)
    except IllegalArgumentException:
        return canonical_text(graph)


def run(args: Namespace) -> int:
    system = open_system(args)
    vector = vector_from_text(args.vector.read_text(encoding="utf-8"), system)
    decoder = Decoder(system, decode_options(args))
    if args.dimacs is not None:
        write_dimacs(decoder.formula(vector), args.dimacs)
        print(f"Wrote {args.dimacs}")
    codec = codec_for(system)
    if args.all:
        graphs = decoder.decode_all(vector, args.limit)
        for graph in graphs:
            print(_text(graph, args, codec))
    else:
        print(_text(decoder.decode(vector), args, codec))
    stats = decoder.stats
    total = sum(stats.seconds.values())
    print(
        f"{stats.tuples} tuple variables, {sum(stats.clauses.values())} clauses, {stats.cycles} cycles, "
        f"{stats.solve_calls} solve calls in {seconds_to_human_readable(total)}"
    )
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("decode", help="Reconstruct the item of a count vector")
    add_system_argument(parser)
    parser.add_argument("--vector", type=Path, required=True, help="Vector file written by 'encode'")
    add_decode_arguments(parser)
    parser.add_argument("--all", action="store_true", help="Print every graph of the vector")
    parser.add_argument("--limit", type=int, default=None, help="Maximum number of graphs printed with --all")
    parser.add_argument("--raw", action="store_true", help="Print placeholder symbols instead of concrete labels")
    parser.add_argument("--dimacs", type=Path, default=None, help="Also write the formula in DIMACS")
    parser.set_defaults(func=run)

import logging
import sys
from argparse import ArgumentParser
from typing import List

from satvec.cli import decode, encode, gen, knn, roundtrip, stats
from satvec.exceptions import IllegalArgumentException, SatvecException

CONFIGURATION_ERROR = 2
IO_ERROR = 1


def main(argv: List[str] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    parser = ArgumentParser(description="Reversible count-vector encoding of graphs", prog="satvec")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (gen, stats, encode, decode, roundtrip, knn):
        command.configure(subparsers)
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(levelname)s: %(message)s")

    try:
        return args.func(args)
    except (SatvecException, IllegalArgumentException) as e:
        print(f"satvec {args.command}: {e}", file=sys.stderr)
        return CONFIGURATION_ERROR
    except OSError as e:
        print(f"satvec {args.command}: {e}", file=sys.stderr)
        return IO_ERROR

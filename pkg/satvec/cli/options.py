from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Optional

from satvec import conf
from satvec.constraint_system import ConstraintSystem, load_system
from satvec.decoder import CYCLE_MODES, EAGER, DecodeOptions
from satvec.experiments.corpus import SENTENCES, domain_of


def add_system_argument(parser: ArgumentParser) -> None:
    parser.add_argument("--system", type=Path, required=True, help="Constraint system file written by 'gen'")


def add_decode_arguments(parser: ArgumentParser) -> None:
    parser.add_argument("--budget", type=float, default=None, help="Decoding budget in seconds")
    parser.add_argument("--verify", dest="verify", action="store_true", default=True)
    parser.add_argument("--no-verify", dest="verify", action="store_false")
    parser.add_argument("--cycles", choices=CYCLE_MODES, default=EAGER, help="How cycle nogoods are added")
    parser.add_argument("--backend", default=None, help="pysat or external")
    parser.add_argument("--solver", default=None, help="Solver name for the pysat backend")


def default_budget(system: ConstraintSystem) -> float:
    if domain_of(system) == SENTENCES:
        return conf.SENTENCE_BUDGET_SECONDS
    return conf.CLAUSE_BUDGET_SECONDS


def decode_options(args: Namespace, budget: Optional[float] = None) -> DecodeOptions:
    return DecodeOptions(
        verify=args.verify,
        budget_seconds=budget if budget is not None else args.budget,
        cycle_mode=args.cycles,
        backend=args.backend,
        solver_name=args.solver,
    )


def open_system(args: Namespace) -> ConstraintSystem:
    return load_system(args.system)

from argparse import ArgumentParser, Namespace, _SubParsersAction

from satvec.cli.options import add_system_argument, open_system
from satvec.constraint_gen import closed_form_sizes, expected_family_sizes, short_groups
from satvec.constraint_gen_impl.constraints import FAMILIES
from satvec.constraint_system import ConstraintSystem
from satvec.printing import print_table


def collision_probability(w: int, t: int) -> float:
    """Chance that two distinct words share their cell in every one of the t sets, for both
    the position they occupy and the one that follows: w^(-2t).

    >>> collision_probability(5, 1)
    0.04
    """
    return float(w) ** (-2 * t)


def print_system_summary(system: ConstraintSystem) -> None:
    signature = system.signature
    print(f"System {system.digest[:12]}: t={system.t}, seed={system.seed}")
    print(f"|S| = {system.symbol_count}")
    print(f"Σ|C_i| = {system.constraint_count}")
    print(f"vector length = {system.length}")
    expected = expected_family_sizes(signature, system.widths)
    closed_forms = closed_form_sizes(signature, system.widths)
    rows = []
    for index, constraint_set in enumerate(system.sets, start=1):
        actual = constraint_set.family_counts()
        for family in FAMILIES:
            if actual.get(family, 0) or expected[family]:
                closed_form = closed_forms[family]
                rows.append(
                    [index, family, actual.get(family, 0), expected[family], "n/a" if closed_form is None else closed_form]
                )
    print_table(rows, headers=["set", "family", "constraints", "expected", "closed form"])
    short = short_groups(signature, system.widths)
    if short:
        print("Groups smaller than their width (closed forms do not apply):")
        for description in short:
            print(f"  {description}")
    else:
        print("Every group fills its width: the closed forms apply")
    if signature.sequence is not None:
        w = system.widths.sequence
        print(f"Word confusion probability w^(-2t) = {collision_probability(w, system.t):.3g} (w={w})")


def run(args: Namespace) -> int:
    print_system_summary(open_system(args))
    return 0


def configure(subparsers: _SubParsersAction) -> None:
    parser: ArgumentParser = subparsers.add_parser("stats", help="Print the sizes of a constraint system")
    add_system_argument(parser)
    parser.set_defaults(func=run)

import itertools
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Tuple

from satvec.constraint_gen_impl.constraints import OrderedConstraint, UnorderedConstraint
from satvec.constraint_gen_impl.partitions import Cell, GenerationContext, context_for
from satvec.random_stream import RandomStream
from satvec.signature import Signature
from satvec.symbols import Symbol


def arity_groups(signature: Signature, rooted: bool, ordered: bool) -> List[Tuple[int, List[Symbol]]]:
    """Non-leaf symbols of Π (rooted) or Ω, with the given orderedness, grouped by arity.
    Sequence position symbols have their own family and are left out."""
    pool: Iterable[Symbol] = signature.effective_roots if rooted else signature.effective_internals
    groups: Dict[int, List[Symbol]] = defaultdict(list)
    for symbol in pool:
        if symbol.is_leaf or symbol.ordered != ordered or signature.sequence_position(symbol) is not None:
            continue
        groups[symbol.arity].append(symbol)
    return sorted(groups.items())


def generate_ordered(
    signature: Signature, w: int, rng: RandomStream, context: Optional[GenerationContext] = None
) -> List[OrderedConstraint]:
    """C_ord = C_P ∪ C_F.

    Each arity group is split into lead cells; every lead cell then gets one fresh split of Ω per argument
    position and one constraint per combination of argument cells.
    """
    context = context or context_for(signature)
    constraints = []
    for rooted in (True, False):
        for arity, symbols in arity_groups(signature, rooted, ordered=True):
            lead = context.split(w, symbols, rng)
            for lead_cell in range(lead.size):
                arg_partitions = [context.split_arguments(w, rng) for _ in range(arity)]
                for cells in itertools.product(*(range(p.size) for p in arg_partitions)):
                    args = tuple(Cell(p, c) for p, c in zip(arg_partitions, cells))
                    constraints.append(OrderedConstraint(rooted, Cell(lead, lead_cell), args))
    return constraints


def generate_unordered(
    signature: Signature, w: int, rng: RandomStream, context: Optional[GenerationContext] = None
) -> List[UnorderedConstraint]:
    """C_unord = C_P ∪ C_F, with argument cells taken as non-decreasing sequences over one split of Ω
    per lead cell."""
    context = context or context_for(signature)
    omega = signature.effective_internals
    constraints = []
    for rooted in (True, False):
        for arity, symbols in arity_groups(signature, rooted, ordered=False):
            lead = context.split(w, symbols, rng)
            for lead_cell in range(lead.size):
                if signature.isolate_negation and signature.negation is not None:
                    partition = context.split_arguments(w, rng)
                    sequences = list(itertools.combinations_with_replacement(range(partition.size), arity))
                else:
                    partition, sequences = context.order(w, arity, omega, rng)
                for cells in sequences:
                    args = tuple(Cell(partition, c) for c in cells)
                    constraints.append(UnorderedConstraint(rooted, Cell(lead, lead_cell), args))
    return constraints

import itertools
from typing import List, Optional

from satvec.constraint_gen_impl.constraints import SequenceConstraint
from satvec.constraint_gen_impl.partitions import Cell, GenerationContext, context_for
from satvec.random_stream import RandomStream
from satvec.signature import Signature


def generate_sequence(
    signature: Signature, w: int, rng: RandomStream, context: Optional[GenerationContext] = None
) -> List[SequenceConstraint]:
    """C_seq: f_j(split(w, Ω_1), ..., split(w, Ω_s), next) for every position j.

    Positions 1 .. l-1 come in a terminated variant (next is EOS) and a continuing one (next is f_(j+1));
    position l is terminated only. Every variant draws fresh slot splits.
    """
    sequence = signature.sequence
    if sequence is None:
        return []
    context = context or context_for(signature)
    positions = context.fixed([[symbol] for symbol in sequence.position_symbols])
    eos = context.fixed([[sequence.eos_symbol]])
    slot_pools = [signature.pool(name).symbols for name in sequence.slot_pools]
    constraints = []
    for position in range(1, sequence.length + 1):
        variants = [True] if position == sequence.length else [True, False]
        for terminated in variants:
            slot_partitions = [context.split(w, pool, rng) for pool in slot_pools]
            following = Cell(eos, 0) if terminated else Cell(positions, position)
            for cells in itertools.product(*(range(p.size) for p in slot_partitions)):
                slots = tuple(Cell(p, c) for p, c in zip(slot_partitions, cells))
                constraints.append(
                    SequenceConstraint(
                        position == 1,
                        Cell(positions, position - 1),
                        slots + (following,),
                        position=position,
                        terminated=terminated,
                    )
                )
    return constraints

from typing import List, Optional

from satvec.constraint_gen_impl.constraints import ParentConstraint
from satvec.constraint_gen_impl.partitions import Cell, GenerationContext, context_for
from satvec.random_stream import RandomStream
from satvec.signature import Signature


def generate_parent(
    signature: Signature, c: int, w: int, rng: RandomStream, context: Optional[GenerationContext] = None
) -> List[ParentConstraint]:
    """C_par: for every parent count i in 1..max_parents, a w-way split of Ω gives the child cells and
    each child cell gets all non-decreasing sequences of i cells over a c-way split of Σ_par.

    A width of 0 disables the family.
    """
    if w == 0:
        return []
    context = context or context_for(signature)
    parent_symbols = signature.parent_symbols
    constraints = []
    for nb_parents in range(1, signature.max_parents + 1):
        children = context.split_arguments(w, rng)
        for child_cell in range(children.size):
            partition, sequences = context.order(c, nb_parents, parent_symbols, rng)
            for cells in sequences:
                parents = tuple(Cell(partition, index) for index in cells)
                constraints.append(ParentConstraint(False, Cell(children, child_cell), parents))
    return constraints

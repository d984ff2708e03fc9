import logging
from dataclasses import dataclass

from satvec import conf
from satvec.constraint_gen_impl.constraint_set import ConstraintSet
from satvec.constraint_gen_impl.node_constraints import generate_ordered, generate_unordered
from satvec.constraint_gen_impl.parent_constraints import generate_parent
from satvec.constraint_gen_impl.partitions import GenerationContext, Universe
from satvec.constraint_gen_impl.sequence_constraints import generate_sequence
from satvec.exceptions import IllegalArgumentException
from satvec.random_stream import RandomStream
from satvec.signature import Signature
from satvec.utils import assert_true

logger = logging.getLogger(__name__)

ORDERED_STREAM = 0
UNORDERED_STREAM = 1
PARENT_STREAM = 2
SEQUENCE_STREAM = 3


@dataclass(frozen=True)
class Widths:
    """Split widths of every constraint family. A parent width of 0 disables parent constraints."""

    ordered: int = conf.ORDERED_WIDTH
    unordered: int = conf.UNORDERED_WIDTH
    parent: int = conf.PARENT_WIDTH
    parent_cells: int = conf.PARENT_WIDTH
    """c: the width of the split of Σ_par the parent cells are drawn from"""
    sequence: int = conf.SEQUENCE_WIDTH

    def __post_init__(self):
        for name in ("ordered", "unordered", "parent_cells", "sequence"):
            assert_true(getattr(self, name) >= 1, IllegalArgumentException(f"Width '{name}' must be at least 1"))
        assert_true(self.parent >= 0, IllegalArgumentException("Width 'parent' must be non-negative"))

    @property
    def parents_enabled(self) -> bool:
        return self.parent > 0

    def to_dict(self) -> dict:
        return {
            "ordered": self.ordered,
            "unordered": self.unordered,
            "parent": self.parent,
            "parent_cells": self.parent_cells,
            "sequence": self.sequence,
        }


DEFAULT_WIDTHS = Widths()
SENTENCE_WIDTHS = Widths(parent=0, sequence=conf.SEQUENCE_WIDTH)


def generate_constraint_set(signature: Signature, widths: Widths, rng: RandomStream, universe: Universe) -> ConstraintSet:
    """Generate one parallel set. Every family draws from its own child stream of `rng`."""
    context = GenerationContext(signature, universe)
    constraints = []
    constraints.extend(generate_ordered(signature, widths.ordered, rng.child(ORDERED_STREAM), context))
    constraints.extend(generate_unordered(signature, widths.unordered, rng.child(UNORDERED_STREAM), context))
    if widths.parents_enabled:
        constraints.extend(
            generate_parent(signature, widths.parent_cells, widths.parent, rng.child(PARENT_STREAM), context)
        )
    constraints.extend(generate_sequence(signature, widths.sequence, rng.child(SEQUENCE_STREAM), context))
    constraint_set = ConstraintSet(universe, constraints, context.partitions)
    logger.debug("Generated %s constraints for %r: %s", len(constraints), rng, constraint_set.family_counts())
    return constraint_set

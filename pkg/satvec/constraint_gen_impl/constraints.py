from dataclasses import dataclass
from typing import ClassVar, Tuple

from satvec.constraint_gen_impl.partitions import Cell

ORDERED_FAMILY = "ordered"
UNORDERED_FAMILY = "unordered"
PARENT_FAMILY = "parent"
SEQUENCE_FAMILY = "sequence"
FAMILIES = (ORDERED_FAMILY, UNORDERED_FAMILY, PARENT_FAMILY, SEQUENCE_FAMILY)


@dataclass(frozen=True, eq=False)
class Constraint:
    rooted: bool
    """Whether the lead set holds root symbols (the P constraints) rather than internal ones (the F constraints)"""
    lead: Cell
    args: Tuple[Cell, ...]

    family: ClassVar[str] = ""
    positional: ClassVar[bool] = True
    """Whether argument cells are compared position by position"""

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def cell_indices(self) -> Tuple[int, ...]:
        return tuple(cell.index for cell in self.args)

    @property
    def is_node_constraint(self) -> bool:
        return self.family != PARENT_FAMILY

    def __repr__(self) -> str:
        args = ",".join(repr(cell) for cell in self.args)
        return f"{type(self).__name__}({'P' if self.rooted else 'F'}{self.lead!r}({args}))"


@dataclass(frozen=True, eq=False)
class OrderedConstraint(Constraint):
    """P^k(F_1, ..., F_k): the lead cell holds the node symbol, argument i lies in F_i."""

    family: ClassVar[str] = ORDERED_FAMILY


@dataclass(frozen=True, eq=False)
class UnorderedConstraint(Constraint):
    """A lead cell and a non-decreasing sequence of cells of a single partition of Ω;
    the arguments must be in one-to-one correspondence with the cells."""

    family: ClassVar[str] = UNORDERED_FAMILY
    positional: ClassVar[bool] = False


@dataclass(frozen=True, eq=False)
class ParentConstraint(Constraint):
    """(F, S_1, ..., S_i): a child in F whose i parents correspond one-to-one with the cells S_j."""

    family: ClassVar[str] = PARENT_FAMILY
    positional: ClassVar[bool] = False

    @property
    def child(self) -> Cell:
        return self.lead

    @property
    def parents(self) -> Tuple[Cell, ...]:
        return self.args


@dataclass(frozen=True, eq=False)
class SequenceConstraint(Constraint):
    """f_j(slot cells..., next) where next is the EOS cell (terminated) or the cell of f_(j+1)."""

    position: int = 1
    terminated: bool = True

    family: ClassVar[str] = SEQUENCE_FAMILY

    @property
    def slots(self) -> Tuple[Cell, ...]:
        return self.args[:-1]

    @property
    def next(self) -> Cell:
        return self.args[-1]

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from satvec.constraint_gen_impl.constraints import (
    PARENT_FAMILY,
    Constraint,
    ParentConstraint,
    SequenceConstraint,
)
from satvec.constraint_gen_impl.partitions import OUTSIDE, Partitioning, Universe
from satvec.symbols import Symbol


@dataclass
class Bucket:
    """The constraints sharing one lead (or child) cell, keyed by their argument (or parent) cell indices.

    For non-positional families the key is the sorted cell tuple.
    """

    arg_partitions: Tuple[Partitioning, ...]
    entries: Dict[Tuple[int, ...], int] = field(default_factory=dict)

    def key_for(self, symbols: Sequence[Symbol], positional: bool) -> Optional[Tuple[int, ...]]:
        if positional:
            cells = tuple(p.cell_of(s) for p, s in zip(self.arg_partitions, symbols))
        else:
            partition = self.arg_partitions[0]
            cells = tuple(sorted(partition.cell_of(s) for s in symbols))
        if OUTSIDE in cells:
            return None
        return cells


@dataclass
class LeadGroup:
    lead: Partitioning
    buckets: Dict[int, Bucket] = field(default_factory=dict)


class ConstraintSet:
    """One parallel set: its constraints in vector order and the partitionings they are built from."""

    def __init__(self, universe: Universe, constraints: List[Constraint], partitions: List[Partitioning]):
        self.universe = universe
        self.constraints = constraints
        self.partitions = partitions
        self._local_index: Dict[Constraint, int] = {c: i for i, c in enumerate(constraints)}
        self._node_groups: Optional[Dict[Tuple[str, bool, int], LeadGroup]] = None
        self._parent_groups: Optional[Dict[int, LeadGroup]] = None
        self._sequence_buckets: Optional[Dict[Tuple[int, bool], Bucket]] = None

    def __len__(self) -> int:
        return len(self.constraints)

    def __getitem__(self, index: int) -> Constraint:
        return self.constraints[index]

    def index(self, constraint: Constraint) -> int:
        return self._local_index[constraint]

    def family_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for constraint in self.constraints:
            counts[constraint.family] = counts.get(constraint.family, 0) + 1
        return counts

    def _build_lookups(self) -> None:
        node_groups: Dict[Tuple[str, bool, int], LeadGroup] = {}
        parent_groups: Dict[int, LeadGroup] = {}
        sequence_buckets: Dict[Tuple[int, bool], Bucket] = {}
        for local, constraint in enumerate(self.constraints):
            if isinstance(constraint, SequenceConstraint):
                key = (constraint.position, constraint.terminated)
                bucket = sequence_buckets.setdefault(key, Bucket(tuple(c.partition for c in constraint.slots)))
                bucket.entries[tuple(c.index for c in constraint.slots)] = local
                continue
            if isinstance(constraint, ParentConstraint):
                group = parent_groups.setdefault(constraint.arity, LeadGroup(constraint.lead.partition))
            else:
                group_key = (constraint.family, constraint.rooted, constraint.arity)
                group = node_groups.setdefault(group_key, LeadGroup(constraint.lead.partition))
            bucket = group.buckets.get(constraint.lead.index)
            if bucket is None:
                if constraint.positional:
                    arg_partitions = tuple(c.partition for c in constraint.args)
                else:
                    arg_partitions = (constraint.args[0].partition,)
                bucket = group.buckets[constraint.lead.index] = Bucket(arg_partitions)
            bucket.entries[constraint.cell_indices] = local
        self._node_groups = node_groups
        self._parent_groups = parent_groups
        self._sequence_buckets = sequence_buckets

    @property
    def node_groups(self) -> Dict[Tuple[str, bool, int], LeadGroup]:
        if self._node_groups is None:
            self._build_lookups()
        assert self._node_groups is not None
        return self._node_groups

    @property
    def parent_groups(self) -> Dict[int, LeadGroup]:
        if self._parent_groups is None:
            self._build_lookups()
        assert self._parent_groups is not None
        return self._parent_groups

    @property
    def sequence_buckets(self) -> Dict[Tuple[int, bool], Bucket]:
        if self._sequence_buckets is None:
            self._build_lookups()
        assert self._sequence_buckets is not None
        return self._sequence_buckets

    @property
    def has_parent_constraints(self) -> bool:
        return any(c.family == PARENT_FAMILY for c in self.constraints)


import itertools
from typing import TYPE_CHECKING, Dict, List, NamedTuple, Optional, Tuple

from satvec.constraint_gen_impl.constraints import Constraint
from satvec.symbols import Symbol
from satvec.vectors import CountVector

if TYPE_CHECKING:
    from satvec.constraint_system import ConstraintSystem

LEAD = -1
"""Slot number of the lead (or child) set of a constraint"""


class SlotRef(NamedTuple):
    """One constituent set of one constraint instance: instance `copy` of the constraint at vector index
    `constraint`, and the argument (or parent) slot, or LEAD."""

    constraint: int
    copy: int
    slot: int

    def at(self, slot: int) -> "SlotRef":
        return SlotRef(self.constraint, self.copy, slot)

    def __str__(self) -> str:
        where = "lead" if self.slot == LEAD else f"#{self.slot}"
        return f"{self.constraint}.{self.copy}{where}"


Association = Tuple[SlotRef, ...]
"""One constituent set per parallel set, all holding the same symbol"""


class Multisets:
    """S̄ and the C̄_i of a vector: a count k yields k distinguishable instances."""

    def __init__(self, vector: CountVector, system: "ConstraintSystem"):
        vector.check_system(system)
        self.system = system
        self.symbol_counts: Dict[Symbol, int] = {}
        self.node_instances: List[List[Tuple[SlotRef, Constraint]]] = [[] for _ in system.sets]
        self.parent_instances: List[List[Tuple[SlotRef, Constraint]]] = [[] for _ in system.sets]
        for index, count in vector.nonzero():
            set_index, local = system.locate(index)
            if set_index < 0:
                self.symbol_counts[system.universe[local]] = count
                continue
            constraint = system.sets[set_index][local]
            target = self.node_instances if constraint.is_node_constraint else self.parent_instances
            for copy in range(count):
                target[set_index].append((SlotRef(index, copy, LEAD), constraint))

    @property
    def is_empty(self) -> bool:
        return not self.symbol_counts and not any(self.node_instances) and not any(self.parent_instances)

    @property
    def t(self) -> int:
        return len(self.node_instances)

    @property
    def symbols(self) -> List[Symbol]:
        return sorted(self.symbol_counts, key=lambda s: s.sort_key)


def extract_multisets(vector: CountVector, system: "ConstraintSystem") -> Multisets:
    return Multisets(vector, system)


class Associations:
    """Γ_l, Γ_a, Γ_c and Γ_p of a set of multisets, computed on demand and cached."""

    def __init__(self, multisets: Multisets):
        self.multisets = multisets
        self.constraints: Dict[int, Constraint] = {}
        symbols = multisets.symbols
        t = multisets.t
        self._leads: List[Dict[Tuple[Symbol, bool], List[SlotRef]]] = [{} for _ in range(t)]
        self._children: List[Dict[Symbol, List[SlotRef]]] = [{} for _ in range(t)]
        for i in range(t):
            for ref, constraint in multisets.node_instances[i]:
                self.constraints[ref.constraint] = constraint
                for symbol in symbols:
                    if symbol in constraint.lead:
                        self._leads[i].setdefault((symbol, constraint.rooted), []).append(ref)
            for ref, constraint in multisets.parent_instances[i]:
                self.constraints[ref.constraint] = constraint
                for symbol in symbols:
                    if symbol in constraint.lead:
                        self._children[i].setdefault(symbol, []).append(ref)
        self._lead_cache: Dict[Tuple[Symbol, bool], List[Association]] = {}
        self._child_cache: Dict[Symbol, List[Association]] = {}

    def constraint(self, ref: SlotRef) -> Constraint:
        return self.constraints[ref.constraint]

    def leads(self, symbol: Symbol, rooted: bool) -> List[Association]:
        """Γ_l: every choice of one node-constraint instance per set whose lead set holds `symbol`"""
        key = (symbol, rooted)
        cached = self._lead_cache.get(key)
        if cached is None:
            cached = list(itertools.product(*(leads.get(key, []) for leads in self._leads)))
            self._lead_cache[key] = cached
        return cached

    def children(self, symbol: Symbol) -> List[Association]:
        """Γ_c: every choice of one parent-constraint instance per set whose child set holds `symbol`"""
        cached = self._child_cache.get(symbol)
        if cached is None:
            cached = list(itertools.product(*(children.get(symbol, []) for children in self._children)))
            self._child_cache[symbol] = cached
        return cached

    def _slots_holding(self, symbol: Symbol, ref: SlotRef) -> List[int]:
        return [slot for slot, cell in enumerate(self.constraint(ref).args) if symbol in cell]

    def arguments(self, symbol: Symbol, lead: Association) -> List[Association]:
        """Γ_a: argument sets of the constraints of `lead` holding `symbol`.
        Positional constraints must use the same argument position in every set."""
        if self.constraint(lead[0]).positional:
            arity = self.constraint(lead[0]).arity
            return [
                tuple(ref.at(slot) for ref in lead)
                for slot in range(arity)
                if all(symbol in self.constraint(ref).args[slot] for ref in lead)
            ]
        per_set = [[ref.at(slot) for slot in self._slots_holding(symbol, ref)] for ref in lead]
        return list(itertools.product(*per_set))

    def parents(self, symbol: Symbol, child: Association) -> List[Association]:
        """Γ_p: parent sets of the constraints of `child` holding `symbol`"""
        per_set = [[ref.at(slot) for slot in self._slots_holding(symbol, ref)] for ref in child]
        return list(itertools.product(*per_set))


def collect_associations(multisets: Multisets) -> Associations:
    return Associations(multisets)


def describe(association: Optional[Association]) -> str:
    if association is None:
        return "_"
    return "(" + " ".join(str(ref) for ref in association) + ")"

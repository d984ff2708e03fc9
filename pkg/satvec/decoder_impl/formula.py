import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Sequence, Tuple

from pysat.card import CardEnc, EncType
from pysat.formula import CNF, IDPool

from satvec import conf
from satvec.decoder_impl.associations import Association, Associations, Multisets, SlotRef
from satvec.decoder_impl.tuples import TupleVar, node_key
from satvec.exceptions import IllegalArgumentException
from satvec.symbols import Symbol

logger = logging.getLogger(__name__)

PAIRWISE = "pairwise"

PARENT_SLOTS = "P"
ARGUMENT_SLOTS = "A"
SYMBOLS = "S"
LEADS = "L"
CHILDREN = "C"
CONNECTIVITY = "PC"
NOGOODS = "N"
NODES = "nodes"
"""Definitions of node literals as the disjunction of their tuples"""
SYMMETRY = "symmetry"
GROUPS = (PARENT_SLOTS, ARGUMENT_SLOTS, SYMBOLS, LEADS, CHILDREN, CONNECTIVITY, NOGOODS, NODES, SYMMETRY)


def _enc_type(name: str) -> int:
    enc = getattr(EncType, name, None)
    if enc is None:
        raise IllegalArgumentException(f"Unknown cardinality encoding '{name}'")
    return enc


def contradiction(pool: IDPool, reason: Hashable) -> List[List[int]]:
    var = pool.id(("contradiction", reason))
    return [[var], [-var]]


def exactly_one(lits: Sequence[int], pool: IDPool, encoding: str = PAIRWISE, reason: Hashable = None) -> List[List[int]]:
    """At least one clause plus at-most-one, pairwise or through a pysat cardinality encoding.

    >>> exactly_one([1, 2, 3], IDPool(start_from=4))
    [[1, 2, 3], [-1, -2], [-1, -3], [-2, -3]]
    """
    lits = list(lits)
    if not lits:
        return contradiction(pool, reason)
    if len(lits) == 1:
        return [[lits[0]]]
    if encoding == PAIRWISE:
        return [lits] + [[-a, -b] for a, b in itertools.combinations(lits, 2)]
    return CardEnc.equals(lits=lits, bound=1, vpool=pool, encoding=_enc_type(encoding)).clauses


def exactly_k(
    lits: Sequence[int], k: int, pool: IDPool, encoding: str = conf.CARDINALITY_ENCODING, reason: Hashable = None
) -> List[List[int]]:
    """
    >>> exactly_k([1, 2], 0, IDPool(start_from=3))
    [[-1], [-2]]
    >>> exactly_k([1, 2], 2, IDPool(start_from=3))
    [[1], [2]]
    """
    lits = list(lits)
    if k > len(lits):
        return contradiction(pool, reason)
    if k == 0:
        return [[-lit] for lit in lits]
    if k == len(lits):
        return [[lit] for lit in lits]
    if k == 1:
        return exactly_one(lits, pool, PAIRWISE, reason)
    return CardEnc.equals(lits=lits, bound=k, vpool=pool, encoding=_enc_type(encoding)).clauses


@dataclass
class Formula:
    """The tuple variables and the clause groups over them"""

    tuples: List[TupleVar]
    pool: IDPool
    variables: Dict[TupleVar, int] = field(default_factory=dict)
    nodes: Dict[Hashable, int] = field(default_factory=dict)
    """Literal of every node: the tuple variable itself when the node has a single tuple"""
    sigma: Dict[int, List[int]] = field(default_factory=dict)
    """σ(r): the variables r implies through parallel connectivity"""
    clauses: Dict[str, List[List[int]]] = field(default_factory=lambda: {name: [] for name in GROUPS})

    def __post_init__(self):
        self._by_var = {var: t for t, var in self.variables.items()}

    def register(self, t: TupleVar) -> int:
        var = self.pool.id(("tuple", t))
        self.variables[t] = var
        self._by_var[var] = t
        return var

    def add(self, group: str, clauses: List[List[int]]) -> None:
        self.clauses[group].extend(clauses)

    @property
    def all_clauses(self) -> List[List[int]]:
        return [clause for name in GROUPS for clause in self.clauses[name]]

    @property
    def clause_counts(self) -> Dict[str, int]:
        return {name: len(self.clauses[name]) for name in GROUPS}

    @property
    def nvars(self) -> int:
        return self.pool.top

    def true_tuples(self, model: Sequence[int]) -> List[TupleVar]:
        true = {lit for lit in model if lit > 0}
        return [t for t in self.tuples if self.variables[t] in true]

    def to_cnf(self) -> CNF:
        return CNF(from_clauses=self.all_clauses)


def build_formula(
    tuples: List[TupleVar],
    multisets: Multisets,
    associations: Associations,
    parents_enabled: bool,
    exactly_one_encoding: str = PAIRWISE,
    cardinality_encoding: str = conf.CARDINALITY_ENCODING,
) -> Formula:
    """P ∧ A ∧ S ∧ L ∧ C ∧ PC, without the cycle nogoods."""
    formula = Formula(tuples, IDPool())
    for t in tuples:
        formula.register(t)
    pool = formula.pool

    node_tuples: Dict[Hashable, List[TupleVar]] = defaultdict(list)
    for t in tuples:
        node_tuples[node_key(t, parents_enabled)].append(t)
    node_list: List[Tuple[Hashable, TupleVar]] = []
    for key, members in node_tuples.items():
        if len(members) == 1:
            formula.nodes[key] = formula.variables[members[0]]
        else:
            literal = pool.id(("node", key))
            formula.nodes[key] = literal
            member_vars = [formula.variables[m] for m in members]
            formula.add(NODES, [[-literal] + member_vars] + [[-var, literal] for var in member_vars])
        node_list.append((key, members[0]))

    def one(group: str, lits: List[int], reason: Hashable) -> None:
        formula.add(group, exactly_one(lits, pool, exactly_one_encoding, (group, reason)))

    # S: every symbol appears exactly as often as counted
    nodes_by_symbol: Dict[Symbol, List[int]] = defaultdict(list)
    for key, sample in node_list:
        nodes_by_symbol[sample.s].append(formula.nodes[key])
    for symbol, count in multisets.symbol_counts.items():
        formula.add(
            SYMBOLS, exactly_k(nodes_by_symbol.get(symbol, []), count, pool, cardinality_encoding, (SYMBOLS, symbol))
        )

    # L and C: every lead (child) set instance belongs to exactly one node
    by_lead: Dict[Tuple[int, SlotRef], List[int]] = defaultdict(list)
    by_child: Dict[Tuple[int, SlotRef], List[int]] = defaultdict(list)
    for key, sample in node_list:
        for i, ref in enumerate(sample.gamma_la or ()):
            by_lead[(i, ref)].append(formula.nodes[key])
        for i, ref in enumerate(sample.gamma_c or ()):
            by_child[(i, ref)].append(formula.nodes[key])
    for i, instances in enumerate(multisets.node_instances):
        for ref, _ in instances:
            one(LEADS, by_lead.get((i, ref), []), (i, ref))
    for i, instances in enumerate(multisets.parent_instances):
        for ref, _ in instances:
            one(CHILDREN, by_child.get((i, ref), []), (i, ref))

    # A and P: every argument (parent) slot instance is taken by exactly one tuple
    by_argument: Dict[Tuple[int, SlotRef], List[int]] = defaultdict(list)
    by_parent: Dict[Tuple[int, SlotRef], List[int]] = defaultdict(list)
    for t in tuples:
        for i, ref in enumerate(t.gamma_a or ()):
            by_argument[(i, ref)].append(formula.variables[t])
        for i, ref in enumerate(t.gamma_p or ()):
            by_parent[(i, ref)].append(formula.variables[t])
    for i, instances in enumerate(multisets.node_instances):
        for ref, constraint in instances:
            for slot in range(constraint.arity):
                one(ARGUMENT_SLOTS, by_argument.get((i, ref.at(slot)), []), (i, ref.at(slot)))
    for i, instances in enumerate(multisets.parent_instances):
        for ref, constraint in instances:
            for slot in range(constraint.arity):
                one(PARENT_SLOTS, by_parent.get((i, ref.at(slot)), []), (i, ref.at(slot)))

    # PC: an edge under p needs a node of p with those lead sets
    by_own_lead: Dict[Tuple[Symbol, Association], List[int]] = defaultdict(list)
    for t in tuples:
        if t.gamma_la is not None:
            by_own_lead[(t.s, t.gamma_la)].append(formula.variables[t])
    for t in tuples:
        if t.is_root:
            continue
        var = formula.variables[t]
        assert t.gamma_lp is not None
        sigma = by_own_lead.get((t.p, t.gamma_lp), [])
        formula.sigma[var] = sigma
        formula.add(CONNECTIVITY, [[-var] + sigma])

    # copies of a root leaf are interchangeable: use them in order
    root_copies: Dict[Symbol, Dict[int, int]] = defaultdict(dict)
    for t in tuples:
        if t.copy is not None:
            root_copies[t.s][t.copy] = formula.variables[t]
    for copies in root_copies.values():
        for k in range(1, len(copies)):
            formula.add(SYMMETRY, [[-copies[k], copies[k - 1]]])

    logger.info("Formula: %s tuples, %s variables, clauses %s", len(tuples), formula.nvars, formula.clause_counts)
    return formula

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List

import numpy as np

from satvec.encoder_impl.matching import match_ordered, match_parent, match_sequence, match_unordered
from satvec.graph import Graph, ensure_valid
from satvec.masks import apply_masks
from satvec.symbols import Symbol
from satvec.vectors import COUNT_DTYPE, CountVector

if TYPE_CHECKING:
    from satvec.constraint_system import ConstraintSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodeMatch:
    constraint: int
    """Vector index of the matched node constraint"""
    slots: tuple
    """Constraint slot taken by every argument, in argument order"""


@dataclass(frozen=True)
class ParentMatch:
    constraint: int
    """Vector index of the matched parent constraint"""
    slots: tuple
    """Constraint slot taken by every incoming edge, in the order of `Graph.parents`"""


@dataclass
class Decomposition:
    """S̄ and the C̄_i of one graph, with the constraint each node matched in every parallel set."""

    graph: Graph
    """The graph with masks applied"""
    symbol_counts: Counter = field(default_factory=Counter)
    constraint_counts: List[Counter] = field(default_factory=list)
    node_matches: List[Dict[int, NodeMatch]] = field(default_factory=list)
    parent_matches: List[Dict[int, ParentMatch]] = field(default_factory=list)

    def to_vector(self, system: "ConstraintSystem") -> CountVector:
        counts = np.zeros(system.length, dtype=COUNT_DTYPE)
        for symbol, count in self.symbol_counts.items():
            counts[system.symbol_index(symbol)] += count
        for set_counts in self.constraint_counts:
            for index, count in set_counts.items():
                counts[index] += count
        return CountVector(counts, system.digest)


def _node_match(graph: Graph, node: int, system: "ConstraintSystem", set_index: int) -> NodeMatch:
    constraints = system.sets[set_index]
    symbol = graph.symbols[node]
    args = [graph.symbols[child] for child in graph.arguments[node]]
    rooted = not graph.parents[node]
    position = system.signature.sequence_position(symbol)
    if position is not None:
        sequence = system.signature.sequence
        assert sequence is not None
        is_last = args[-1] == sequence.eos_symbol
        local, slots = match_sequence(position, args[:-1], is_last, constraints)
    elif symbol.ordered:
        local, slots = match_ordered(symbol, rooted, args, constraints)
    else:
        local, slots = match_unordered(symbol, rooted, args, constraints)
    return NodeMatch(system.constraint_index(set_index, local), slots)


def _parent_match(graph: Graph, node: int, system: "ConstraintSystem", set_index: int) -> ParentMatch:
    parents = [graph.symbols[parent] for parent, _ in graph.parents[node]]
    local, slots = match_parent(graph.symbols[node], parents, system.sets[set_index])
    return ParentMatch(system.constraint_index(set_index, local), slots)


def decompose(graph: Graph, system: "ConstraintSystem") -> Decomposition:
    """Validate the graph, apply the signature's masks and match every node in every parallel set.

    Raises UnrepresentableGraphError for graphs `validate` rejects, MatchError when a node has no
    constraint (a symbol or arity absent when the system was generated).
    """
    ensure_valid(graph, system.signature)
    masked = apply_masks(graph, system.signature)
    decomposition = Decomposition(masked, Counter(masked.symbols))
    for set_index, constraint_set in enumerate(system.sets):
        counts: Counter = Counter()
        node_matches: Dict[int, NodeMatch] = {}
        parent_matches: Dict[int, ParentMatch] = {}
        with_parents = system.widths.parents_enabled
        for node, symbol in enumerate(masked.symbols):
            if not symbol.is_leaf:
                node_matches[node] = _node_match(masked, node, system, set_index)
                counts[node_matches[node].constraint] += 1
            if with_parents and masked.parents[node]:
                parent_matches[node] = _parent_match(masked, node, system, set_index)
                counts[parent_matches[node].constraint] += 1
        decomposition.constraint_counts.append(counts)
        decomposition.node_matches.append(node_matches)
        decomposition.parent_matches.append(parent_matches)
    return decomposition


def encode(graph: Graph, system: "ConstraintSystem") -> CountVector:
    """The count vector of `graph`: symbol occurrences then matched constraints of each parallel set.

    >>> from satvec.constraint_system import build_system
    >>> from satvec.constraint_gen import Widths
    >>> from satvec.graph import term
    >>> from satvec.signature import declare_signature
    >>> from satvec.symbols import Symbol
    >>> system = build_system(declare_signature(["f/2"], ["a/0", "b/0"], max_parents=2), Widths(parent_cells=1), t=3)
    >>> encode(Graph.from_terms(term(Symbol("f", 2), term(Symbol("a")), term(Symbol("b")))), system).total
    12
    """
    vector = decompose(graph, system).to_vector(system)
    logger.debug("Encoded %s nodes into %s non-zero coordinates", graph.node_count, len(vector.nonzero()))
    return vector

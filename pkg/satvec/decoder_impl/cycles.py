import logging
from typing import Callable, Collection, Dict, Hashable, Iterator, List, Mapping, Optional, Tuple

import networkx
from pysat.formula import IDPool

from satvec.decoder_impl.tuples import TupleVar
from satvec.exceptions import CycleBudgetExceeded, IllegalArgumentException

logger = logging.getLogger(__name__)

EAGER = "eager"
LAZY = "lazy"
OFF = "off"
CYCLE_MODES = (EAGER, LAZY, OFF)

CHECK_EVERY = 256
"""Number of cycles enumerated between two calls to the interruption check"""


def implication_graph(sigma: Dict[int, List[int]], restrict_to: Optional[Collection[int]] = None) -> networkx.DiGraph:
    """Edge r -> q iff q ∈ σ(r), optionally restricted to a set of variables"""
    graph = networkx.DiGraph()
    for var, implied in sigma.items():
        if restrict_to is not None and var not in restrict_to:
            continue
        graph.add_node(var)
        for other in implied:
            if restrict_to is None or other in restrict_to:
                graph.add_edge(var, other)
    return graph


def lead_graph(variables: Mapping[TupleVar, int]) -> networkx.DiGraph:
    """The implication graph with the tuples of one node merged.

    A node is (symbol, own lead sets). Every non-root tuple gives an edge from its own node to the node of
    its parent, labelled with the tuple variables it carries. σ(r) holds exactly the tuples whose own node
    is the parent node of r, so the tuple cycles are the closed walks of this graph and forbidding its
    simple cycles forbids all of them.
    """
    graph = networkx.DiGraph()
    for t, var in variables.items():
        if t.is_root or t.gamma_la is None:
            continue
        child, parent = (t.s, t.gamma_la), (t.p, t.gamma_lp)
        if graph.has_edge(child, parent):
            graph.edges[child, parent]["variables"].append(var)
        else:
            graph.add_edge(child, parent, variables=[var])
    return graph


def iter_simple_cycles(
    graph: networkx.DiGraph, cap: int, check: Optional[Callable[[], None]] = None
) -> Iterator[List[Hashable]]:
    """Johnson's simple cycles, stopped with CycleBudgetExceeded past `cap`.

    `check` runs every CHECK_EVERY cycles and may raise to interrupt the enumeration.
    """
    if cap < 0:
        raise IllegalArgumentException(f"The cycle cap must be non-negative, got {cap}")
    for count, cycle in enumerate(networkx.simple_cycles(graph), start=1):
        if count > cap:
            raise CycleBudgetExceeded(
                f"The implication graph ({graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges)"
                f" holds more than {cap} simple cycles"
            )
        if check is not None and count % CHECK_EVERY == 0:
            check()
        yield cycle


def find_cycle_nogoods(
    graph: networkx.DiGraph, cap: int, check: Optional[Callable[[], None]] = None
) -> List[List[int]]:
    """One clause ¬(r_1 ∧ ... ∧ r_k) per simple cycle of the implication graph, enumerated with Johnson's algorithm.

    >>> find_cycle_nogoods(networkx.DiGraph([(1, 2), (2, 3), (3, 1)]), cap=10)
    [[-3, -2, -1]]
    >>> sorted(find_cycle_nogoods(networkx.DiGraph([(1, 2), (2, 1), (3, 4), (4, 3)]), cap=10))
    [[-4, -3], [-2, -1]]
    >>> find_cycle_nogoods(networkx.DiGraph([(1, 2), (2, 3)]), cap=10)
    []
    """
    nogoods = [sorted(-var for var in cycle) for cycle in iter_simple_cycles(graph, cap, check)]
    logger.debug("Found %s simple cycles", len(nogoods))
    return nogoods


def lead_cycle_nogoods(
    graph: networkx.DiGraph, pool: IDPool, cap: int, check: Optional[Callable[[], None]] = None
) -> Tuple[List[List[int]], List[List[int]]]:
    """Definitions of the edge literals and one nogood per simple cycle of a lead graph.

    An edge carrying a single tuple uses that tuple's variable; otherwise a fresh literal is implied by
    each of its tuples. Literals are only created for edges that lie on a cycle.
    """
    literals: Dict[Tuple[Hashable, Hashable], int] = {}
    definitions: List[List[int]] = []

    def literal(u: Hashable, v: Hashable) -> int:
        if (u, v) not in literals:
            variables = graph.edges[u, v]["variables"]
            if len(variables) == 1:
                literals[(u, v)] = variables[0]
            else:
                edge = pool.id(("edge", u, v))
                definitions.extend([-var, edge] for var in variables)
                literals[(u, v)] = edge
        return literals[(u, v)]

    nogoods = []
    for cycle in iter_simple_cycles(graph, cap, check):
        nogoods.append(sorted(-literal(u, v) for u, v in zip(cycle, cycle[1:] + cycle[:1])))
    logger.debug("Found %s simple cycles over %s nodes", len(nogoods), graph.number_of_nodes())
    return definitions, nogoods

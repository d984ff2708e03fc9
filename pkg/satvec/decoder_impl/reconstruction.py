from collections import Counter, defaultdict
from typing import TYPE_CHECKING, Dict, Hashable, List, Optional, Sequence, Set, Tuple

from satvec.decoder_impl.associations import LEAD, Association, SlotRef
from satvec.decoder_impl.tuples import TupleVar, node_key
from satvec.encoder_impl.decomposition import Decomposition
from satvec.exceptions import InvalidReconstruction
from satvec.graph import Graph, Violation, validate
from satvec.signature import Signature
from satvec.symbols import Symbol

if TYPE_CHECKING:
    from satvec.constraint_system import ConstraintSystem

MISSING_PARENT = "missing parent"


def model_to_graph(true_tuples: Sequence[TupleVar], signature: Signature, parents_enabled: bool) -> Graph:
    """Assemble the (masked) graph a model describes.

    Every node gathers its true tuples; each non-root tuple becomes an edge from the node holding the
    lead sets `gamma_lp` to the tuple's node, at the argument slot it took in the first parallel set.
    Raises InvalidReconstruction when the result is not a valid graph.
    """
    node_ids: Dict[Hashable, int] = {}
    symbols: List[Symbol] = []
    by_lead: Dict[Tuple[Symbol, Association], int] = {}
    for t in true_tuples:
        key = node_key(t, parents_enabled)
        if key not in node_ids:
            node_ids[key] = len(symbols)
            symbols.append(t.s)
        if t.gamma_la is not None:
            by_lead[(t.s, t.gamma_la)] = node_ids[key]

    arguments: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    violations = []
    for t in true_tuples:
        if t.is_root:
            continue
        assert t.p is not None and t.gamma_lp is not None and t.gamma_a is not None
        child = node_ids[node_key(t, parents_enabled)]
        parent = by_lead.get((t.p, t.gamma_lp))
        if parent is None:
            violations.append(Violation(child, MISSING_PARENT, f"no {t.p} node holds the lead sets of {t}"))
            continue
        arguments[parent].append((t.gamma_a[0].slot, child))
    if violations:
        raise InvalidReconstruction("; ".join(str(v) for v in violations[:5]), violations)
    graph = Graph(
        tuple(symbols),
        tuple(tuple(child for _, child in sorted(arguments[node])) for node in range(len(symbols))),
    )
    violations = validate(graph, signature)
    if violations:
        raise InvalidReconstruction("; ".join(str(v) for v in violations[:5]), violations)
    return graph


def induced_tuples(decomposition: Decomposition, system: "ConstraintSystem") -> Set[TupleVar]:
    """The tuples the graph's own decomposition makes true.

    Instances of a constraint matched k times are numbered in node order, as are the copies of root leaves.
    """
    graph = decomposition.graph
    parents_enabled = system.widths.parents_enabled
    t = len(system.sets)
    copies: Counter = Counter()

    def instance(constraint: int) -> SlotRef:
        ref = SlotRef(constraint, copies[constraint], LEAD)
        copies[constraint] += 1
        return ref

    lead_refs: List[Dict[int, SlotRef]] = [{} for _ in range(t)]
    child_refs: List[Dict[int, SlotRef]] = [{} for _ in range(t)]
    for i in range(t):
        for node in range(graph.node_count):
            if node in decomposition.node_matches[i]:
                lead_refs[i][node] = instance(decomposition.node_matches[i][node].constraint)
            if node in decomposition.parent_matches[i]:
                child_refs[i][node] = instance(decomposition.parent_matches[i][node].constraint)

    def gamma_la(node: int) -> Optional[Association]:
        if graph.symbols[node].is_leaf:
            return None
        return tuple(lead_refs[i][node] for i in range(t))

    def gamma_c(node: int) -> Optional[Association]:
        if not parents_enabled or not graph.parents[node]:
            return None
        return tuple(child_refs[i][node] for i in range(t))

    result: Set[TupleVar] = set()
    root_leaf_copies: Counter = Counter()
    for node, symbol in enumerate(graph.symbols):
        edges = graph.parents[node]
        if not edges:
            copy = None
            if symbol.is_leaf:
                copy = root_leaf_copies[symbol]
                root_leaf_copies[symbol] += 1
            result.add(TupleVar(symbol, gamma_la=gamma_la(node), copy=copy))
            continue
        for edge, (parent, position) in enumerate(edges):
            gamma_a = tuple(
                lead_refs[i][parent].at(decomposition.node_matches[i][parent].slots[position]) for i in range(t)
            )
            gamma_p = None
            if parents_enabled:
                gamma_p = tuple(
                    child_refs[i][node].at(decomposition.parent_matches[i][node].slots[edge]) for i in range(t)
                )
            result.add(
                TupleVar(
                    symbol,
                    graph.symbols[parent],
                    gamma_p,
                    gamma_c(node),
                    gamma_la(parent),
                    gamma_a,
                    gamma_la(node),
                )
            )
    return result

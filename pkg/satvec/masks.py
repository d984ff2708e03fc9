from typing import Dict, List, Set

import networkx

from satvec.exceptions import UnrepresentableGraphError
from satvec.graph import MASK, Graph, Violation, render_node
from satvec.signature import Signature


def strip_masks(graph: Graph) -> Graph:
    return graph.relabel(lambda symbol: symbol.base)


def _argument_positions(graph: Graph, parent: int) -> List[int]:
    """1-based position of every argument slot of `parent`.
    Arguments of unordered parents are ranked by their rendered text so that permutations give the same masks."""
    args = graph.arguments[parent]
    if graph.symbols[parent].ordered:
        return list(range(1, len(args) + 1))
    ranked = sorted(range(len(args)), key=lambda slot: (render_node(graph, args[slot]), slot))
    positions = [0] * len(args)
    for rank, slot in enumerate(ranked, start=1):
        positions[slot] = rank
    return positions


def apply_masks(graph: Graph, signature: Signature) -> Graph:
    """Extend the label of every masked internal node with its depth and/or its argument position.

    Leaves and roots are never masked. With `bypass_negation`, a negation node keeps its label and
    its argument takes the position of the negation node itself.
    """
    base = strip_masks(graph)
    masks = signature.masks
    if not masks.enabled or base.is_empty:
        return base
    try:
        order = list(networkx.topological_sort(base.to_networkx()))
    except networkx.NetworkXUnfeasible:
        raise UnrepresentableGraphError("Masks cannot be applied to a cyclic graph", [Violation(None, MASK, "cycle")])

    depths: Dict[int, Set[int]] = {}
    positions: Dict[int, Set[int]] = {}
    slot_positions = {node: _argument_positions(base, node) for node in range(base.node_count) if base.arguments[node]}
    for node in order:
        edges = base.parents[node]
        if not edges:
            depths[node] = {0}
            positions[node] = set()
            continue
        depths[node] = {depth + 1 for parent, _ in edges for depth in depths[parent]}
        node_positions: Set[int] = set()
        for parent, slot in edges:
            parent_symbol = base.symbols[parent]
            if masks.bypass_negation and signature.is_negation(parent_symbol) and positions[parent]:
                node_positions |= positions[parent]
            else:
                node_positions.add(slot_positions[parent][slot])
        positions[node] = node_positions

    violations = []
    symbols = list(base.symbols)
    for node, symbol in enumerate(base.symbols):
        if not base.parents[node] or not signature.maskable(symbol):
            continue
        depth = None
        arg_position = None
        if masks.depth:
            if len(depths[node]) > 1:
                violations.append(Violation(node, MASK, f"{symbol} is reached at depths {sorted(depths[node])}"))
                continue
            depth = next(iter(depths[node]))
            if masks.max_depth is not None and depth > masks.max_depth:
                violations.append(Violation(node, MASK, f"{symbol} at depth {depth} exceeds {masks.max_depth}"))
                continue
        if masks.arg_number:
            if len(positions[node]) > 1:
                violations.append(Violation(node, MASK, f"{symbol} sits at positions {sorted(positions[node])}"))
                continue
            arg_position = next(iter(positions[node]))
        symbols[node] = symbol.masked(depth, arg_position)
    if violations:
        raise UnrepresentableGraphError("; ".join(str(v) for v in violations[:5]), violations)
    return Graph(tuple(symbols), base.arguments)

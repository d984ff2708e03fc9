from collections import Counter
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import networkx

from satvec.exceptions import IllegalArgumentException, UnrepresentableGraphError
from satvec.signature import Signature
from satvec.symbols import Symbol
from satvec.utils import assert_true

UNKNOWN_SYMBOL = "unknown symbol"
ARITY_MISMATCH = "arity mismatch"
TOO_MANY_PARENTS = "too many parents"
CYCLE = "cycle"
NOT_A_ROOT = "not a root symbol"
NOT_INTERNAL = "not an internal symbol"
BAD_SEQUENCE = "malformed sequence"
MASK = "mask"


@dataclass(frozen=True)
class Violation:
    node: Optional[int]
    kind: str
    message: str

    def __str__(self) -> str:
        where = "graph" if self.node is None else f"node {self.node}"
        return f"{where}: {self.kind}: {self.message}"


@dataclass(frozen=True)
class Term:
    """Nested construction helper: `Term(f, (Term(a), Term(b)))` stands for f(a, b)."""

    symbol: Symbol
    args: Tuple["Term", ...] = ()


def term(symbol: Symbol, *args: "Term") -> Term:
    return Term(symbol, tuple(args))


@dataclass(frozen=True)
class Graph:
    """A rooted DAG. Node ids are the positions in `symbols`; `arguments[n]` lists the children of node n
    in argument order (the order is irrelevant for unordered symbols).

    A node used twice by the same parent appears twice in that parent's argument list.
    """

    symbols: Tuple[Symbol, ...] = ()
    arguments: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        assert_true(
            len(self.symbols) == len(self.arguments),
            IllegalArgumentException("Graph: one argument list is expected per node"),
        )
        for args in self.arguments:
            for child in args:
                assert_true(
                    0 <= child < len(self.symbols), IllegalArgumentException(f"Graph: unknown node id {child}")
                )

    @property
    def node_count(self) -> int:
        return len(self.symbols)

    @property
    def is_empty(self) -> bool:
        return self.node_count == 0

    @property
    def parents(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """For every node, its incoming edges as (parent id, 0-based argument position)"""
        cached = self.__dict__.get("_parents")
        if cached is None:
            incoming: List[List[Tuple[int, int]]] = [[] for _ in self.symbols]
            for parent, args in enumerate(self.arguments):
                for position, child in enumerate(args):
                    incoming[child].append((parent, position))
            cached = tuple(tuple(edges) for edges in incoming)
            object.__setattr__(self, "_parents", cached)
        return cached

    @property
    def roots(self) -> Tuple[int, ...]:
        return tuple(node for node, edges in enumerate(self.parents) if not edges)

    def relabel(self, function: Callable[[Symbol], Symbol]) -> "Graph":
        return Graph(tuple(function(symbol) for symbol in self.symbols), self.arguments)

    def to_networkx(self) -> networkx.MultiDiGraph:
        graph = networkx.MultiDiGraph()
        graph.add_nodes_from(range(self.node_count))
        for parent, args in enumerate(self.arguments):
            for child in args:
                graph.add_edge(parent, child)
        return graph

    @staticmethod
    def from_terms(*terms: Term) -> "Graph":
        """Build a forest of trees. Use a GraphBuilder to share nodes."""
        builder = GraphBuilder()
        for t in terms:
            builder.add_term(t)
        return builder.build()


class GraphBuilder:
    def __init__(self):
        self._symbols: List[Symbol] = []
        self._arguments: List[Tuple[int, ...]] = []

    def add(self, symbol: Symbol, *args: int) -> int:
        self._symbols.append(symbol)
        self._arguments.append(tuple(args))
        return len(self._symbols) - 1

    def add_term(self, t: Term) -> int:
        args = [self.add_term(arg) for arg in t.args]
        return self.add(t.symbol, *args)

    def build(self) -> Graph:
        return Graph(tuple(self._symbols), tuple(self._arguments))


def find_cycles(graph: Graph, limit: int = 10) -> List[List[int]]:
    return [cycle for _, cycle in zip(range(limit), networkx.simple_cycles(networkx.DiGraph(graph.to_networkx())))]


def validate(graph: Graph, signature: Signature) -> List[Violation]:
    """Every reason why `graph` cannot be encoded over `signature`. An empty list means encodable.

    Graphs may use base symbols (masks are then checked for applicability) or masked symbols.
    """
    violations: List[Violation] = []
    for cycle in find_cycles(graph):
        violations.append(Violation(cycle[0], CYCLE, "nodes " + " -> ".join(str(n) for n in cycle + cycle[:1])))
    for node, symbol in enumerate(graph.symbols):
        args = graph.arguments[node]
        edges = graph.parents[node]
        if not signature.knows(symbol):
            violations.append(Violation(node, UNKNOWN_SYMBOL, f"{symbol} ({symbol.declaration})"))
            continue
        if len(args) != symbol.arity:
            violations.append(Violation(node, ARITY_MISMATCH, f"{symbol} expects {symbol.arity}, got {len(args)}"))
        if len(edges) > signature.max_parents:
            violations.append(
                Violation(node, TOO_MANY_PARENTS, f"{len(edges)} parents, at most {signature.max_parents} allowed")
            )
        if not edges and not signature.is_root(symbol):
            violations.append(Violation(node, NOT_A_ROOT, f"{symbol} has no parent but is not a root symbol"))
        if edges and not signature.is_internal(symbol):
            violations.append(Violation(node, NOT_INTERNAL, f"{symbol} has parents but is not an internal symbol"))
    if signature.sequence is not None:
        violations.extend(_sequence_violations(graph, signature))
    if not violations and signature.masks.enabled and not any(s.is_masked for s in graph.symbols):
        from satvec.masks import apply_masks

        try:
            apply_masks(graph, signature)
        except UnrepresentableGraphError as e:
            violations.extend(e.violations or [Violation(None, MASK, str(e))])
    return violations


def _sequence_violations(graph: Graph, signature: Signature) -> List[Violation]:
    sequence = signature.sequence
    assert sequence is not None
    slot_pools = [set(signature.pool(name).symbols) for name in sequence.slot_pools]
    violations = []
    for node, symbol in enumerate(graph.symbols):
        position = signature.sequence_position(symbol)
        if position is None or len(graph.arguments[node]) != symbol.arity:
            continue
        args = graph.arguments[node]
        for slot, (child, pool) in enumerate(zip(args, slot_pools), start=1):
            if graph.symbols[child] not in pool:
                violations.append(
                    Violation(node, BAD_SEQUENCE, f"entry {graph.symbols[child]} of slot {slot} is outside its pool")
                )
        following = graph.symbols[args[-1]]
        expected = [sequence.eos_symbol]
        if position < sequence.length:
            expected.append(sequence.position_symbol(position + 1))
        if following not in expected:
            violations.append(
                Violation(node, BAD_SEQUENCE, f"{symbol} must be followed by {' or '.join(map(str, expected))}")
            )
    return violations


def ensure_valid(graph: Graph, signature: Signature) -> None:
    violations = validate(graph, signature)
    if violations:
        raise UnrepresentableGraphError("; ".join(str(v) for v in violations[:5]), violations)


def render_node(graph: Graph, node: int, render_symbol: Callable[[Symbol], str] = str) -> str:
    symbol = graph.symbols[node]
    args = [render_node(graph, child, render_symbol) for child in graph.arguments[node]]
    if not symbol.ordered:
        args = sorted(args)
    label = render_symbol(symbol)
    if not args:
        return label
    return f"{label}({','.join(args)})"


def canonical_text(graph: Graph) -> str:
    """Deterministic rendering: unordered arguments are sorted by their rendered text, trees of a forest too.

    Shared nodes are rendered at every occurrence.

    >>> from satvec.symbols import Symbol
    >>> f, a, b = Symbol("f", 2), Symbol("a"), Symbol("b")
    >>> canonical_text(Graph.from_terms(term(f, term(a), term(b))))
    'f(a,b)'
    >>> canonical_text(Graph.from_terms(term(Symbol("or", 2, ordered=False), term(Symbol("q")), term(Symbol("p")))))
    'or(p,q)'
    >>> canonical_text(Graph())
    ''
    """
    return " ; ".join(sorted(render_node(graph, root) for root in graph.roots))


def same_shape(graph: Graph, other: Graph) -> bool:
    """canonical_text equality plus equal in-degree profiles, so that sharing differences are not hidden"""
    if canonical_text(graph) != canonical_text(other):
        return False
    profile = Counter((s, len(e)) for s, e in zip(graph.symbols, graph.parents))
    return profile == Counter((s, len(e)) for s, e in zip(other.symbols, other.parents))

import itertools
import math
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import pyparsing as pp

from satvec import conf
from satvec.exceptions import (
    ClauseSyntaxError,
    IllegalArgumentException,
    PlaceholderPoolExhausted,
    UnrepresentableGraphError,
)
from satvec.graph import Graph, GraphBuilder, canonical_text
from satvec.signature import BOTH, MaskOptions, PlaceholderBinder, PlaceholderPool, Signature, declare_signature
from satvec.symbols import INTERNAL, Symbol

pp.ParserElement.enable_packrat()

OR = "|"
NOT = "~"
EQUAL = "="
NOT_EQUAL = "!="
CONNECTIVES = (OR, NOT, EQUAL, NOT_EQUAL)
SINGLE_VARIABLE = "VAR"
VARIABLE_POOL = "var"
CONSTANT_POOL = "const"
PLACEHOLDERS = "placeholders"
SINGLE = "single"
DEFAULT_PERMUTATION_CAP = 5040

NEGATION = Symbol(NOT, 1)


def or_symbol(arity: int) -> Symbol:
    return Symbol(OR, arity, ordered=False)


def equality_symbol(label: str) -> Symbol:
    return Symbol(label, 2, ordered=False)


def is_variable(symbol: Symbol) -> bool:
    return symbol.is_leaf and symbol.label[:1].isupper()


def predicate_pool(arity: int) -> str:
    return f"pred{arity}_"


def function_pool(arity: int) -> str:
    return f"func{arity}_"


# Parse tree: ("var", name) | ("app", name, [terms]) | ("eq", label, left, right) | ("not", literal)


def _grammar() -> pp.ParserElement:
    lparen, rparen = pp.Suppress("("), pp.Suppress(")")
    variable = pp.Regex(r"[A-Z][A-Za-z0-9_]*").set_parse_action(lambda t: ("var", t[0]))
    name = pp.Regex(r"[a-z0-9][A-Za-z0-9_]*|'[^']+'")
    term = pp.Forward()
    arguments = lparen + pp.Group(pp.DelimitedList(term)) + rparen
    application = (name + pp.Optional(arguments, default=[])).set_parse_action(
        lambda t: ("app", t[0], list(t[1]))
    )
    term <<= variable | application
    equality = (term + pp.one_of([NOT_EQUAL, EQUAL]) + term).set_parse_action(lambda t: ("eq", t[1], t[0], t[2]))
    atom = equality | application | lparen + equality + rparen
    literal = pp.Forward()
    literal <<= (pp.Suppress(NOT) + literal).set_parse_action(lambda t: ("not", t[0])) | atom | (
        lparen + literal + rparen
    )
    clause = pp.DelimitedList(literal, delim=OR)
    return clause


_CLAUSE = _grammar()


@dataclass
class _GraphWriter:
    builder: GraphBuilder
    shared: Dict[str, int]

    def term(self, tree) -> int:
        kind = tree[0]
        if kind == "var":
            return self.leaf(tree[1])
        _, name, args = tree
        if not args:
            return self.leaf(name)
        children = [self.term(arg) for arg in args]
        return self.builder.add(Symbol(name, len(children)), *children)

    def leaf(self, name: str) -> int:
        node = self.shared.get(name)
        if node is None:
            node = self.shared[name] = self.builder.add(Symbol(name, 0))
        return node

    def literal(self, tree) -> int:
        kind = tree[0]
        if kind == "not":
            inner = tree[1]
            if inner[0] == "eq":
                flipped = NOT_EQUAL if inner[1] == EQUAL else EQUAL
                return self.literal(("eq", flipped, inner[2], inner[3]))
            return self.builder.add(NEGATION, self.literal(inner))
        if kind == "eq":
            _, label, left, right = tree
            return self.builder.add(equality_symbol(label), self.term(left), self.term(right))
        _, name, args = tree
        children = [self.term(arg) for arg in args]
        return self.builder.add(Symbol(name, len(children)), *children)


def parse_clause(text: str) -> Graph:
    """The graph of a CNF clause: literals under an unordered `|` root (the literal itself when alone),
    variables and constants shared between their occurrences.

    >>> canonical_text(parse_clause("g(X) | f(X, g(Y), g(Y)) | ~h(X, Y, Z)"))
    '|(f(X,g(Y),g(Y)),g(X),~(h(X,Y,Z)))'
    >>> canonical_text(parse_clause("~(a = b)"))
    '!=(a,b)'
    >>> try:
    ...     parse_clause("f(")
    ... except ClauseSyntaxError as e:
    ...     print("syntax error")
    syntax error
    """
    try:
        literals = _CLAUSE.parse_string(text, parse_all=True).as_list()
    except pp.ParseException as e:
        raise ClauseSyntaxError(str(e), e.col)
    writer = _GraphWriter(GraphBuilder(), {})
    nodes = [writer.literal(literal) for literal in literals]
    if len(nodes) > 1:
        writer.builder.add(or_symbol(len(nodes)), *nodes)
    return writer.builder.build()


def _render(graph: Graph, node: int) -> str:
    symbol = graph.symbols[node]
    args = [_render(graph, child) for child in graph.arguments[node]]
    if not symbol.ordered:
        args = sorted(args)
    if symbol.label == OR and not symbol.ordered:
        return " | ".join(args)
    if symbol.label in (EQUAL, NOT_EQUAL) and not symbol.ordered:
        return f"{args[0]} {symbol.label} {args[1]}"
    if symbol == NEGATION:
        return f"~{args[0]}"
    if not args:
        return symbol.label
    return f"{symbol.label}({', '.join(args)})"


def clause_text(graph: Graph) -> str:
    """Clause syntax read back by `parse_clause`, unordered arguments sorted

    >>> clause_text(parse_clause("g(X) | ~h(X, Y) | X = a"))
    'X = a | g(X) | ~h(X, Y)'
    """
    return " | ".join(sorted(_render(graph, root) for root in graph.roots))


def _skeleton(graph: Graph, node: int, memo: Dict[int, str]) -> str:
    """Rendering with every variable written `_`"""
    if node not in memo:
        symbol = graph.symbols[node]
        args = [_skeleton(graph, child, memo) for child in graph.arguments[node]]
        if not symbol.ordered:
            args = sorted(args)
        label = "_" if is_variable(symbol) else symbol.label
        memo[node] = label if not args else f"{label}({','.join(args)})"
    return memo[node]


def _tie_groups(graph: Graph, memo: Dict[int, str]) -> List[Tuple[int, List[List[int]]]]:
    """For every unordered node, its argument slots grouped by equal skeleton, in skeleton order"""
    groups = []
    for node, symbol in enumerate(graph.symbols):
        if symbol.ordered or not graph.arguments[node]:
            continue
        by_skeleton: Dict[str, List[int]] = {}
        for slot, child in enumerate(graph.arguments[node]):
            by_skeleton.setdefault(_skeleton(graph, child, memo), []).append(slot)
        groups.append((node, [by_skeleton[key] for key in sorted(by_skeleton)]))
    return groups


def _variable_order(graph: Graph, slot_orders: Dict[int, List[int]]) -> List[str]:
    order: List[str] = []

    def visit(node: int) -> None:
        symbol = graph.symbols[node]
        if is_variable(symbol):
            if symbol.label not in order:
                order.append(symbol.label)
            return
        args = graph.arguments[node]
        for slot in slot_orders.get(node, range(len(args))):
            visit(args[slot])

    memo: Dict[int, str] = {}
    for root in sorted(graph.roots, key=lambda r: _skeleton(graph, r, memo)):
        visit(root)
    return order


def _rename(graph: Graph, names: Dict[str, str]) -> Graph:
    return graph.relabel(lambda s: Symbol(names[s.label], 0) if is_variable(s) else s)


def normalize_variables(
    graph: Graph,
    n: Optional[int] = None,
    mode: str = PLACEHOLDERS,
    permutation_cap: int = DEFAULT_PERMUTATION_CAP,
) -> Graph:
    """Rename variables to var1 ... vark in first-occurrence order, or replace every occurrence with a
    separate `VAR` leaf in the single mode.

    The order of arguments of unordered nodes with the same variable-free rendering is open: every
    choice (up to `permutation_cap` combinations) is tried and the least rendering kept, so that the
    result does not depend on the input names.

    >>> canonical_text(normalize_variables(parse_clause("f(Y, X)")))
    'f(var1,var2)'
    >>> canonical_text(normalize_variables(parse_clause("p(X) | q(X, Y)"), mode=SINGLE))
    '|(p(VAR),q(VAR,VAR))'
    """
    if mode == SINGLE:
        return _single_variable(graph)
    if mode != PLACEHOLDERS:
        raise IllegalArgumentException(f"Unknown variable mode '{mode}', expected '{PLACEHOLDERS}' or '{SINGLE}'")
    variables = {s.label for s in graph.symbols if is_variable(s)}
    if n is not None and len(variables) > n:
        raise PlaceholderPoolExhausted(f"{len(variables)} variables exceed the {n} variable placeholders")
    if not variables:
        return graph
    memo: Dict[int, str] = {}
    groups = _tie_groups(graph, memo)
    choices = [[list(p) for p in itertools.permutations(slots)] for _, node_groups in groups for slots in node_groups]
    combinations = math.prod(len(c) for c in choices)
    best: Optional[Tuple[str, Graph]] = None
    candidates: Iterable = itertools.product(*choices) if combinations <= permutation_cap else [
        tuple(c[0] for c in choices)
    ]
    for combination in candidates:
        slot_orders: Dict[int, List[int]] = {}
        picks = iter(combination)
        for node, node_groups in groups:
            slot_orders[node] = [slot for _ in node_groups for slot in next(picks)]
        order = _variable_order(graph, slot_orders)
        renamed = _rename(graph, {label: f"{VARIABLE_POOL}{i}" for i, label in enumerate(order, start=1)})
        text = canonical_text(renamed)
        if best is None or text < best[0]:
            best = (text, renamed)
    assert best is not None
    return best[1]


def _single_variable(graph: Graph) -> Graph:
    builder = GraphBuilder()
    ids: Dict[int, int] = {}

    def copy(node: int) -> int:
        if is_variable(graph.symbols[node]):
            return builder.add(Symbol(SINGLE_VARIABLE, 0))
        if node not in ids:
            ids[node] = builder.add(graph.symbols[node], *(copy(child) for child in graph.arguments[node]))
        return ids[node]

    for root in graph.roots:
        copy(root)
    return builder.build()


def predicate_nodes(graph: Graph) -> Set[int]:
    """Atoms: the literals of the clause, under negations included"""
    atoms = set()
    literals: List[int] = []
    for root in graph.roots:
        symbol = graph.symbols[root]
        literals.extend(graph.arguments[root] if symbol.label == OR and not symbol.ordered else [root])
    while literals:
        node = literals.pop()
        symbol = graph.symbols[node]
        if symbol == NEGATION:
            literals.extend(graph.arguments[node])
        elif symbol.label not in (EQUAL, NOT_EQUAL) or symbol.ordered:
            atoms.add(node)
    return atoms


def bind_clause(graph: Graph, binder: PlaceholderBinder) -> Graph:
    """Replace predicate, function and constant names by placeholders; variables and connectives stay."""
    predicates = {graph.symbols[node] for node in predicate_nodes(graph)}
    pools = {pool.name for pool in binder.signature.pools}

    def pool_of(symbol: Symbol) -> Optional[str]:
        name = placeholder_pool(symbol)
        if name is not None and name not in pools:
            raise UnrepresentableGraphError(f"{symbol.declaration}: arity above the caps of the signature")
        return name

    def placeholder_pool(symbol: Symbol) -> Optional[str]:
        if symbol.label in CONNECTIVES or symbol.label == SINGLE_VARIABLE or is_variable(symbol):
            return None
        if re.fullmatch(rf"{VARIABLE_POOL}\d+", symbol.label) and symbol.is_leaf:
            return None
        if symbol in predicates:
            return predicate_pool(symbol.arity)
        if symbol.is_leaf:
            return CONSTANT_POOL
        return function_pool(symbol.arity)

    return binder.bind_graph(graph, pool_of)


def clause_signature(
    predicates: int = 16,
    functions: int = 16,
    constants: int = 16,
    variables: int = 8,
    max_literals: int = conf.MAX_UNORDERED_ARITY,
    max_arity: int = conf.MAX_ORDERED_ARITY,
    max_parents: int = conf.MAX_PARENTS,
) -> Signature:
    """Placeholder pools per arity for predicates and functions, constants and variables, with `|`, `=` and
    `!=` unordered and `~` isolated from other symbols and skipped by argument-number masks.

    >>> signature = clause_signature(predicates=2, functions=2, constants=2, variables=2)
    >>> signature.is_root(or_symbol(3)), signature.is_internal(NEGATION), signature.masks.arg_number
    (True, True, True)
    """
    connectives = [equality_symbol(EQUAL), equality_symbol(NOT_EQUAL), NEGATION]
    pools = [PlaceholderPool(predicate_pool(a), BOTH, a, predicates) for a in range(0, max_arity + 1)]
    pools += [PlaceholderPool(function_pool(a), INTERNAL, a, functions) for a in range(1, max_arity + 1)]
    pools += [PlaceholderPool(CONSTANT_POOL, INTERNAL, 0, constants), PlaceholderPool(VARIABLE_POOL, INTERNAL, 0, variables)]
    return declare_signature(
        roots=[or_symbol(k) for k in range(2, max_literals + 1)] + connectives,
        internals=connectives + [Symbol(SINGLE_VARIABLE, 0)],
        max_parents=max_parents,
        masks=MaskOptions(arg_number=True, bypass_negation=True),
        pools=pools,
        negation=NEGATION,
        isolate_negation=True,
        max_ordered_arity=max_arity,
        max_unordered_arity=max_literals,
    )


@dataclass(frozen=True)
class TptpClause:
    name: str
    role: str
    text: str

    @property
    def graph(self) -> Graph:
        return parse_clause(self.text)


_TPTP_STATEMENT = re.compile(r"^cnf\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*,\s*(.*)\)\s*\.$", re.DOTALL)
_UNSUPPORTED = re.compile(r"^(fof|tff|thf|tcf|include)\(")
_QUANTIFIER = re.compile(r"[!?]\s*\[")


def read_tptp(lines: Iterable[str]) -> List[TptpClause]:
    """The cnf statements of a TPTP file; `%` comments are skipped, other statement kinds rejected.

    >>> [c.text for c in read_tptp(["% axioms", "cnf(a1, axiom, p(X) | ~q(X)).", "cnf(a2, axiom,", "  (r(a)))."])]
    ['p(X) | ~q(X)', 'r(a)']
    """
    clauses = []
    pending = ""
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not pending and (not line or line.startswith("%")):
            continue
        pending = f"{pending} {line}".strip()
        if not pending.endswith("."):
            continue
        statement, pending = pending, ""
        if _UNSUPPORTED.match(statement):
            raise ClauseSyntaxError(f"line {number}: only cnf statements are supported: {statement[:40]}")
        match = _TPTP_STATEMENT.match(statement)
        if match is None:
            raise ClauseSyntaxError(f"line {number}: malformed statement: {statement[:40]}")
        text = match.group(3).strip()
        if _QUANTIFIER.search(text):
            raise ClauseSyntaxError(f"line {number}: quantifiers are not supported in cnf clauses")
        while text.startswith("(") and text.endswith(")") and _balanced(text[1:-1]):
            text = text[1:-1].strip()
        clauses.append(TptpClause(match.group(1), match.group(2), text))
    if pending:
        raise ClauseSyntaxError(f"unterminated statement: {pending[:40]}")
    return clauses


def _balanced(text: str) -> bool:
    depth = 0
    for char in text:
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth < 0:
            return False
    return depth == 0



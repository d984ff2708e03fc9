import itertools
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from satvec.exceptions import PlaceholderPoolExhausted, SignatureError
from satvec.symbols import INTERNAL, ORDERED, ROOT, UNORDERED, Symbol, make_symbol, parse_symbol
from satvec.utils import assert_true

if TYPE_CHECKING:
    from satvec.graph import Graph

FORMAT_HEADER = "signature v1"
BOTH = "both"
POOL_KINDS = (ROOT, INTERNAL, BOTH)

SymbolOrText = Union[Symbol, str]


@dataclass(frozen=True)
class MaskOptions:
    depth: bool = False
    max_depth: Optional[int] = None
    """Depth masks are bounded: inputs deeper than this are rejected"""
    arg_number: bool = False
    bypass_negation: bool = False
    """Argument-number masks skip negation nodes and apply to the negated argument instead"""

    @property
    def enabled(self) -> bool:
        return self.depth or self.arg_number


@dataclass(frozen=True)
class PlaceholderPool:
    """A family of interchangeable placeholder symbols `name1 ... name<size>` that concrete
    labels are bound to on first encounter."""

    name: str
    kind: str
    arity: int
    size: int
    ordered: bool = True

    @property
    def symbols(self) -> Tuple[Symbol, ...]:
        return tuple(Symbol(f"{self.name}{i}", self.arity, self.ordered) for i in range(1, self.size + 1))


@dataclass(frozen=True)
class SequenceSpec:
    """Position symbols f1 ... f<length>, each taking one entry per slot plus the next position (or EOS)."""

    label: str
    length: int
    eos: str
    slot_pools: Tuple[str, ...]

    @property
    def slots(self) -> int:
        return len(self.slot_pools)

    def position_symbol(self, position: int) -> Symbol:
        return Symbol(f"{self.label}{position}", self.slots + 1, True)

    @property
    def eos_symbol(self) -> Symbol:
        return Symbol(self.eos, 0)

    @property
    def position_symbols(self) -> Tuple[Symbol, ...]:
        return tuple(self.position_symbol(j) for j in range(1, self.length + 1))


def _sorted(symbols: Iterable[Symbol]) -> Tuple[Symbol, ...]:
    return tuple(sorted(set(symbols), key=lambda s: s.sort_key))


@dataclass(frozen=True)
class Signature:
    """The declared symbol universe Σ = Π ∪ Ω.

    `roots` (Π) and `internals` (Ω) may overlap: the kind of a node is decided by whether it has parents.
    Placeholder pools and the optional sequence declaration expand into ordinary symbols.
    """

    declared_roots: Tuple[Symbol, ...]
    declared_internals: Tuple[Symbol, ...]
    max_parents: int = 1
    masks: MaskOptions = MaskOptions()
    pools: Tuple[PlaceholderPool, ...] = ()
    sequence: Optional[SequenceSpec] = None
    negation: Optional[Symbol] = None
    isolate_negation: bool = False
    max_ordered_arity: Optional[int] = None
    max_unordered_arity: Optional[int] = None

    # Base symbols

    @property
    def roots(self) -> Tuple[Symbol, ...]:
        return self._derived["roots"]

    @property
    def internals(self) -> Tuple[Symbol, ...]:
        return self._derived["internals"]

    # Effective symbols (mask expansions included)

    @property
    def effective_roots(self) -> Tuple[Symbol, ...]:
        return self.roots

    @property
    def effective_internals(self) -> Tuple[Symbol, ...]:
        return self._derived["effective_internals"]

    @property
    def mask_expansions(self) -> Tuple[Symbol, ...]:
        return self._derived["mask_expansions"]

    @property
    def universe(self) -> Tuple[Symbol, ...]:
        """Every symbol that can appear in an encoded graph, in the fixed symbol order"""
        return self._derived["universe"]

    @property
    def base_universe(self) -> Tuple[Symbol, ...]:
        return _sorted(self.roots + self.internals)

    @property
    def parent_symbols(self) -> Tuple[Symbol, ...]:
        """Σ_par: the non-leaf symbols"""
        return tuple(s for s in self.universe if not s.is_leaf)

    def is_root(self, symbol: Symbol) -> bool:
        return symbol in self._derived["root_set"]

    def is_internal(self, symbol: Symbol) -> bool:
        return symbol in self._derived["internal_set"]

    def knows(self, symbol: Symbol) -> bool:
        return symbol in self._derived["universe_set"]

    def sequence_position(self, symbol: Symbol) -> Optional[int]:
        return self._derived["positions"].get(symbol)

    def is_negation(self, symbol: Symbol) -> bool:
        return self.negation is not None and symbol.base == self.negation

    def pool(self, name: str) -> PlaceholderPool:
        for pool in self.pools:
            if pool.name == name:
                return pool
        raise SignatureError(f"Unknown placeholder pool '{name}'")

    def maskable(self, symbol: Symbol) -> bool:
        """Whether an internal occurrence of this base symbol receives masks"""
        if not self.masks.enabled or symbol.is_leaf:
            return False
        if symbol in self._derived["positions"]:
            return False
        if self.masks.bypass_negation and self.is_negation(symbol):
            return False
        return True

    @property
    def max_parent_arity(self) -> int:
        return max((s.arity for s in self.base_universe), default=0)

    def cap_violations(self) -> List[str]:
        violations = []
        for symbol in self.base_universe:
            if symbol.ordered and self.max_ordered_arity is not None and symbol.arity > self.max_ordered_arity:
                violations.append(f"{symbol.declaration}: ordered arity above cap {self.max_ordered_arity}")
            if not symbol.ordered and self.max_unordered_arity is not None and symbol.arity > self.max_unordered_arity:
                violations.append(f"{symbol.declaration}: unordered arity above cap {self.max_unordered_arity}")
        return violations

    @property
    def _derived(self) -> Dict:
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = self._derive()
            object.__setattr__(self, "_cache", cache)
        return cache

    def _derive(self) -> Dict:
        roots = list(self.declared_roots)
        internals = list(self.declared_internals)
        for pool in self.pools:
            if pool.kind in (ROOT, BOTH):
                roots.extend(pool.symbols)
            if pool.kind in (INTERNAL, BOTH):
                internals.extend(pool.symbols)
        positions: Dict[Symbol, int] = {}
        if self.sequence is not None:
            for j, symbol in enumerate(self.sequence.position_symbols, start=1):
                positions[symbol] = j
                (roots if j == 1 else internals).append(symbol)
            roots.append(self.sequence.eos_symbol)
            internals.append(self.sequence.eos_symbol)
        derived: Dict = {"roots": _sorted(roots), "internals": _sorted(internals), "positions": positions}
        object.__setattr__(self, "_cache", derived)
        expansions = []
        if self.masks.enabled:
            depths: Sequence[Optional[int]] = [None]
            arg_positions: Sequence[Optional[int]] = [None]
            if self.masks.depth:
                depths = range(1, (self.masks.max_depth or 0) + 1)
            if self.masks.arg_number:
                arg_positions = range(1, self.max_parent_arity + 1)
            for symbol in derived["internals"]:
                if self.maskable(symbol):
                    for depth, arg_position in itertools.product(depths, arg_positions):
                        expansions.append(symbol.masked(depth, arg_position))
        derived["mask_expansions"] = _sorted(expansions)
        derived["effective_internals"] = _sorted(list(derived["internals"]) + expansions)
        derived["universe"] = _sorted(derived["roots"] + derived["effective_internals"])
        derived["root_set"] = frozenset(derived["roots"])
        derived["internal_set"] = frozenset(derived["effective_internals"])
        derived["universe_set"] = frozenset(derived["universe"])
        return derived

    def to_text(self) -> str:
        """Canonical text form, read back by `signature_from_text`."""
        lines = [FORMAT_HEADER, f"max_parents {self.max_parents}"]
        caps = []
        if self.max_ordered_arity is not None:
            caps.append(f"ordered {self.max_ordered_arity}")
        if self.max_unordered_arity is not None:
            caps.append(f"unordered {self.max_unordered_arity}")
        if caps:
            lines.append("caps " + " ".join(caps))
        if self.negation is not None:
            lines.append(f"negation {self.negation.declaration}" + (" isolate" if self.isolate_negation else ""))
        if self.masks.depth:
            lines.append(f"mask depth {self.masks.max_depth}")
        if self.masks.arg_number:
            lines.append("mask argnum")
        if self.masks.bypass_negation:
            lines.append("mask bypass_negation")
        for kind, symbols in ((ROOT, self.declared_roots), (INTERNAL, self.declared_internals)):
            for symbol in _sorted(symbols):
                lines.append(f"{kind} {_declaration(symbol)}")
        for pool in self.pools:
            ordering = "" if pool.arity == 0 else (f" {ORDERED}" if pool.ordered else f" {UNORDERED}")
            lines.append(f"pool {pool.name} {pool.kind} {pool.arity} {pool.size}{ordering}")
        if self.sequence is not None:
            seq = self.sequence
            lines.append(" ".join(["sequence", seq.label, str(seq.length), seq.eos, *seq.slot_pools]))
        return "\n".join(lines) + "\n"


def _declaration(symbol: Symbol) -> str:
    if symbol.is_leaf:
        return symbol.declaration
    return f"{symbol.declaration} {ORDERED if symbol.ordered else UNORDERED}"


def _as_symbols(symbols: Iterable[SymbolOrText], kind: str) -> Tuple[Symbol, ...]:
    result = []
    seen = set()
    for item in symbols:
        symbol = parse_symbol(item) if isinstance(item, str) else make_symbol(item.label, item.arity, item.ordered)
        if symbol in seen:
            raise SignatureError(f"Duplicate {kind} declaration {symbol.declaration}")
        seen.add(symbol)
        result.append(symbol)
    return tuple(result)


def declare_signature(
    roots: Iterable[SymbolOrText],
    internals: Iterable[SymbolOrText],
    max_parents: int = 1,
    masks: MaskOptions = MaskOptions(),
    pools: Iterable[PlaceholderPool] = (),
    sequence: Optional[SequenceSpec] = None,
    negation: Optional[SymbolOrText] = None,
    isolate_negation: bool = False,
    max_ordered_arity: Optional[int] = None,
    max_unordered_arity: Optional[int] = None,
) -> Signature:
    """Validate a declaration and build the corresponding Signature.

    >>> sig = declare_signature(["p/2"], ["f/2", "a/0", "b/0"])
    >>> len(sig.roots), len(sig.internals)
    (1, 3)
    >>> sig = declare_signature([], ["g/1", "a/0"], masks=MaskOptions(depth=True, max_depth=3))
    >>> [str(s) for s in sig.mask_expansions]
    ['g@d1', 'g@d2', 'g@d3']
    >>> declare_signature(["p/1", "p/1"], [])
    Traceback (most recent call last):
    ...
    satvec.exceptions.SignatureError: Duplicate root declaration p/1
    """
    assert_true(max_parents >= 1, SignatureError("max_parents must be at least 1"))
    if masks.depth:
        assert_true(
            masks.max_depth is not None and masks.max_depth >= 1,
            SignatureError("Depth masks need a maximum depth of at least 1"),
        )
    pools = tuple(pools)
    pool_names = set()
    for pool in pools:
        assert_true(pool.kind in POOL_KINDS, SignatureError(f"Pool {pool.name}: unknown kind '{pool.kind}'"))
        assert_true(pool.name not in pool_names, SignatureError(f"Duplicate pool '{pool.name}'"))
        assert_true(pool.size >= 0 and pool.arity >= 0, SignatureError(f"Pool {pool.name}: negative size or arity"))
        assert_true(
            pool.arity > 0 or pool.ordered, SignatureError(f"Pool {pool.name}: leaves cannot be unordered")
        )
        pool_names.add(pool.name)
    if sequence is not None:
        assert_true(sequence.length >= 1, SignatureError("A sequence needs at least one position"))
        assert_true(len(sequence.slot_pools) >= 1, SignatureError("A sequence needs at least one slot"))
        for name in sequence.slot_pools:
            assert_true(name in pool_names, SignatureError(f"Sequence slot pool '{name}' is not declared"))
    negation_symbol = None
    if negation is not None:
        negation_symbol = parse_symbol(negation) if isinstance(negation, str) else negation
        assert_true(negation_symbol.arity == 1, SignatureError("The negation symbol must have arity 1"))
    signature = Signature(
        declared_roots=_as_symbols(roots, ROOT),
        declared_internals=_as_symbols(internals, INTERNAL),
        max_parents=max_parents,
        masks=masks,
        pools=pools,
        sequence=sequence,
        negation=negation_symbol,
        isolate_negation=isolate_negation,
        max_ordered_arity=max_ordered_arity,
        max_unordered_arity=max_unordered_arity,
    )
    if negation_symbol is not None:
        assert_true(
            signature.knows(negation_symbol),
            SignatureError(f"The negation symbol {negation_symbol.declaration} is not declared"),
        )
    return signature


def signature_from_text(text: str) -> Signature:
    """Parse the text form written by `Signature.to_text`.

    >>> text = "signature v1\\nmax_parents 2\\nroot p/2 ordered\\ninternal a/0\\n"
    >>> signature_from_text(text).to_text() == text
    True
    """
    roots: List[Symbol] = []
    internals: List[Symbol] = []
    pools: List[PlaceholderPool] = []
    options: Dict = {"max_parents": 1}
    mask_options: Dict = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line == FORMAT_HEADER:
            continue
        words = line.split()
        keyword = words[0]
        try:
            if keyword in (ROOT, INTERNAL):
                ordering = words[2] if len(words) > 2 else ORDERED
                (roots if keyword == ROOT else internals).append(parse_symbol(words[1], ordering))
            elif keyword == "max_parents":
                options["max_parents"] = int(words[1])
            elif keyword == "caps":
                for name, value in zip(words[1::2], words[2::2]):
                    assert_true(name in (ORDERED, UNORDERED), SignatureError(f"unknown cap '{name}'"))
                    options[f"max_{name}_arity"] = int(value)
            elif keyword == "negation":
                options["negation"] = words[1]
                options["isolate_negation"] = "isolate" in words[2:]
            elif keyword == "mask":
                if words[1] == "depth":
                    mask_options.update(depth=True, max_depth=int(words[2]))
                elif words[1] == "argnum":
                    mask_options["arg_number"] = True
                elif words[1] == "bypass_negation":
                    mask_options["bypass_negation"] = True
                else:
                    raise SignatureError(f"unknown mask '{words[1]}'")
            elif keyword == "pool":
                ordering = words[5] if len(words) > 5 else ORDERED
                pools.append(PlaceholderPool(words[1], words[2], int(words[3]), int(words[4]), ordering == ORDERED))
            elif keyword == "sequence":
                options["sequence"] = SequenceSpec(words[1], int(words[2]), words[3], tuple(words[4:]))
            else:
                raise SignatureError(f"unknown keyword '{keyword}'")
        except (IndexError, ValueError) as e:
            raise SignatureError(f"line {number}: cannot read '{line}' ({e})")
        except SignatureError as e:
            raise SignatureError(f"line {number}: {e}")
    return declare_signature(roots, internals, masks=MaskOptions(**mask_options), pools=pools, **options)


@dataclass
class PlaceholderBinder:
    """Binds concrete labels to placeholder symbols, first come first served.

    This is the only mutating operation around a signature: run it in a dedicated binding phase.

    >>> sig = declare_signature([], [], pools=[PlaceholderPool("w", INTERNAL, 0, 2)])
    >>> binder = PlaceholderBinder(sig)
    >>> binder.bind("Texas", "w"), binder.bind("border", "w"), binder.bind("Texas", "w")
    (Symbol('w1/0'), Symbol('w2/0'), Symbol('w1/0'))
    >>> binder.concrete_label(Symbol("w2", 0))
    'border'
    """

    signature: Signature
    bindings: Dict[str, Dict[str, str]] = field(default_factory=dict)
    """pool name -> concrete label -> placeholder label"""

    def bind(self, label: str, pool_name: str) -> Symbol:
        pool = self.signature.pool(pool_name)
        pool_bindings = self.bindings.setdefault(pool_name, {})
        placeholder = pool_bindings.get(label)
        if placeholder is None:
            index = len(pool_bindings) + 1
            if index > pool.size:
                raise PlaceholderPoolExhausted(f"Placeholder pool '{pool_name}' is exhausted ({pool.size} symbols)")
            placeholder = f"{pool.name}{index}"
            pool_bindings[label] = placeholder
        return Symbol(placeholder, pool.arity, pool.ordered)

    def concrete_label(self, placeholder: Symbol) -> Optional[str]:
        for pool_bindings in self.bindings.values():
            for label, bound in pool_bindings.items():
                if bound == placeholder.label:
                    return label
        return None

    def bind_graph(self, graph: "Graph", pool_of: Callable[[Symbol], Optional[str]]) -> "Graph":
        """Replace every node symbol with its placeholder. `pool_of` returns None for symbols kept as they are."""

        def relabel(symbol: Symbol) -> Symbol:
            pool_name = pool_of(symbol)
            if pool_name is None:
                return symbol
            return self.bind(symbol.label, pool_name)

        return graph.relabel(relabel)

    def unbind_graph(self, graph: "Graph") -> "Graph":
        reverse = {
            bound: label for pool_bindings in self.bindings.values() for label, bound in pool_bindings.items()
        }

        def relabel(symbol: Symbol) -> Symbol:
            label = reverse.get(symbol.label)
            if label is None:
                return symbol
            return Symbol(label, symbol.arity, symbol.ordered, symbol.depth, symbol.arg_position)

        return graph.relabel(relabel)

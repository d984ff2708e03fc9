import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from satvec.random_stream import RandomStream
from satvec.signature import Signature
from satvec.symbols import Symbol

CELL_DTYPE = np.int16
OUTSIDE = -1


class Universe:
    """The symbols of a system in the fixed symbol order, with their vector indices."""

    def __init__(self, symbols: Sequence[Symbol]):
        self.symbols: Tuple[Symbol, ...] = tuple(symbols)
        self._index: Dict[Symbol, int] = {symbol: i for i, symbol in enumerate(self.symbols)}

    def index(self, symbol: Symbol) -> int:
        return self._index[symbol]

    def get(self, symbol: Symbol) -> Optional[int]:
        return self._index.get(symbol)

    def __contains__(self, symbol: Symbol) -> bool:
        return symbol in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index: int) -> Symbol:
        return self.symbols[index]


class Partitioning:
    """Disjoint cells over a subset of the universe, stored as one cell index per universe symbol
    (OUTSIDE for symbols that were not split)."""

    def __init__(self, universe: Universe, assignment: np.ndarray, size: int):
        self.universe = universe
        self.assignment = assignment
        self.size = size
        self.id: Optional[int] = None

    def cell_of(self, symbol: Symbol) -> int:
        index = self.universe.get(symbol)
        if index is None:
            return OUTSIDE
        return int(self.assignment[index])

    def members(self, cell: int) -> Tuple[Symbol, ...]:
        return tuple(self.universe[int(i)] for i in np.flatnonzero(self.assignment == cell))

    @property
    def parts(self) -> Tuple[Tuple[Symbol, ...], ...]:
        return tuple(self.members(cell) for cell in range(self.size))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Partitioning(id={self.id}, size={self.size})"


@dataclass(frozen=True, eq=False)
class Cell:
    """One cell of a partitioning; the symbol sets constraints are made of."""

    partition: Partitioning
    index: int

    def __contains__(self, symbol: Union[Symbol, int]) -> bool:
        if isinstance(symbol, Symbol):
            return self.partition.cell_of(symbol) == self.index
        return int(self.partition.assignment[symbol]) == self.index

    @property
    def members(self) -> Tuple[Symbol, ...]:
        return self.partition.members(self.index)

    def __repr__(self) -> str:
        return f"Cell({self.partition.id}:{self.index})"


def _empty_assignment(universe: Universe) -> np.ndarray:
    return np.full(len(universe), OUTSIDE, dtype=CELL_DTYPE)


def split(w: int, symbols: Iterable[Symbol], rng: RandomStream, universe: Universe) -> Partitioning:
    """Randomly partition `symbols` into at most `w` cells whose sizes differ by at most one:
    shuffle, then deal round robin.

    >>> from satvec.symbols import Symbol
    >>> universe = Universe([Symbol(x) for x in "abcd"])
    >>> p = split(2, universe.symbols, RandomStream(7), universe)
    >>> p.size, sorted(len(part) for part in p.parts)
    (2, [2, 2])
    >>> split(4, universe.symbols[:2], RandomStream(7), universe).size
    2
    >>> split(3, [], RandomStream(7), universe).size
    0
    """
    indices = np.array(sorted({universe.index(s) for s in symbols}), dtype=np.int64)
    size = min(w, len(indices))
    assignment = _empty_assignment(universe)
    if size > 0:
        shuffled = indices[rng.permutation(len(indices))]
        assignment[shuffled] = np.arange(len(indices)) % size
    return Partitioning(universe, assignment, size)


def split_isolating(
    w: int, symbols: Iterable[Symbol], rng: RandomStream, universe: Universe, isolated: Iterable[Symbol]
) -> Partitioning:
    """split(w, M ∖ I) ∪ {I}: the isolated symbols share one extra cell"""
    symbols = set(symbols)
    isolated = symbols & set(isolated)
    if not isolated:
        return split(w, symbols, rng, universe)
    partition = split(w, symbols - isolated, rng, universe)
    for symbol in isolated:
        partition.assignment[universe.index(symbol)] = partition.size
    partition.size += 1
    return partition


def order(
    w: int, length: int, symbols: Iterable[Symbol], rng: RandomStream, universe: Universe
) -> Tuple[Partitioning, List[Tuple[int, ...]]]:
    """All non-decreasing cell sequences of the given length over one w-way split of `symbols`.

    >>> from satvec.symbols import Symbol
    >>> universe = Universe([Symbol(x) for x in "abcd"])
    >>> _, sequences = order(2, 2, universe.symbols, RandomStream(3), universe)
    >>> sequences
    [(0, 0), (0, 1), (1, 1)]
    """
    partition = split(w, symbols, rng, universe)
    return partition, list(itertools.combinations_with_replacement(range(partition.size), length))


def fixed_partitioning(universe: Universe, cells: Sequence[Sequence[Symbol]]) -> Partitioning:
    assignment = _empty_assignment(universe)
    for cell, symbols in enumerate(cells):
        for symbol in symbols:
            assignment[universe.index(symbol)] = cell
    return Partitioning(universe, assignment, len(cells))


@dataclass
class GenerationContext:
    """Collects the partitionings created while generating one parallel set."""

    signature: Signature
    universe: Universe
    partitions: List[Partitioning] = field(default_factory=list)

    def register(self, partition: Partitioning) -> Partitioning:
        partition.id = len(self.partitions)
        self.partitions.append(partition)
        return partition

    def split(self, w: int, symbols: Iterable[Symbol], rng: RandomStream) -> Partitioning:
        return self.register(split(w, symbols, rng, self.universe))

    def split_arguments(self, w: int, rng: RandomStream) -> Partitioning:
        """A split of Ω, with the negation symbol in its own cell when isolation is requested"""
        omega = self.signature.effective_internals
        if self.signature.isolate_negation and self.signature.negation is not None:
            negations = [s for s in omega if self.signature.is_negation(s)]
            return self.register(split_isolating(w, omega, rng, self.universe, negations))
        return self.register(split(w, omega, rng, self.universe))

    def order(
        self, w: int, length: int, symbols: Iterable[Symbol], rng: RandomStream
    ) -> Tuple[Partitioning, List[Tuple[int, ...]]]:
        partition, sequences = order(w, length, symbols, rng, self.universe)
        return self.register(partition), sequences

    def fixed(self, cells: Sequence[Sequence[Symbol]]) -> Partitioning:
        return self.register(fixed_partitioning(self.universe, cells))


def context_for(signature: Signature) -> GenerationContext:
    return GenerationContext(signature, Universe(signature.universe))

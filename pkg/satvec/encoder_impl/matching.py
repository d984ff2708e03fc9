from typing import Sequence, Tuple

import networkx
from networkx.algorithms import bipartite

from satvec.constraint_gen_impl.constraint_set import Bucket, ConstraintSet, LeadGroup
from satvec.constraint_gen_impl.constraints import ORDERED_FAMILY, UNORDERED_FAMILY
from satvec.constraint_gen_impl.partitions import OUTSIDE
from satvec.exceptions import IllegalArgumentException, MatchError
from satvec.symbols import Symbol
from satvec.utils import assert_true

Match = Tuple[int, Tuple[int, ...]]
"""(local constraint index, constraint slot of every argument or incoming edge)"""


def _bucket(group: LeadGroup, lead: Symbol, what: str) -> Bucket:
    cell = group.lead.cell_of(lead)
    bucket = group.buckets.get(cell) if cell != OUTSIDE else None
    if bucket is None:
        raise MatchError(f"No {what} constraint has a lead cell containing {lead}")
    return bucket


def has_perfect_matching(symbols: Sequence[Symbol], cells: Sequence[int], cell_of) -> bool:
    """Whether the symbols can be put in one-to-one correspondence with the cells they belong to

    >>> cell_of = {"x": 0, "y": 1, "z": 1}.get
    >>> has_perfect_matching(["z", "x", "y"], [0, 1, 1], cell_of)
    True
    >>> has_perfect_matching(["y", "y", "x"], [0, 0, 1], cell_of)
    False
    """
    if len(symbols) != len(cells):
        return False
    graph = networkx.Graph()
    left = [("arg", i) for i in range(len(symbols))]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("slot", j) for j in range(len(cells))), bipartite=1)
    for i, symbol in enumerate(symbols):
        for j, cell in enumerate(cells):
            if cell_of(symbol) == cell:
                graph.add_edge(("arg", i), ("slot", j))
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    return all(node in matching for node in left)


def canonical_correspondence(symbols: Sequence[Symbol], cells: Sequence[int], cell_of) -> Tuple[int, ...]:
    """Slot of every symbol: symbols taken in the fixed symbol order, each sent to the least free slot of its cell.

    Ties between equal symbols keep their input order.
    """
    free = list(range(len(cells)))
    slots = [0] * len(symbols)
    for i in sorted(range(len(symbols)), key=lambda i: (symbols[i].sort_key, i)):
        cell = cell_of(symbols[i])
        slot = next(j for j in free if cells[j] == cell)
        free.remove(slot)
        slots[i] = slot
    return tuple(slots)


def match_ordered(symbol: Symbol, rooted: bool, args: Sequence[Symbol], constraints: ConstraintSet) -> Match:
    """The unique ordered constraint whose lead cell holds `symbol` and whose i-th cell holds the i-th argument"""
    assert_true(len(args) >= 1, IllegalArgumentException(f"{symbol} has no arguments to match"))
    group = constraints.node_groups.get((ORDERED_FAMILY, rooted, len(args)))
    if group is None:
        raise MatchError(f"No ordered constraint for {'root' if rooted else 'internal'} arity {len(args)}")
    bucket = _bucket(group, symbol, "ordered")
    key = bucket.key_for(args, positional=True)
    local = bucket.entries.get(key) if key is not None else None
    if local is None:
        raise MatchError(f"No ordered constraint matches {symbol}({','.join(map(str, args))})")
    return local, tuple(range(len(args)))


def _match_non_positional(bucket: Bucket, members: Sequence[Symbol], what: str) -> Match:
    partition = bucket.arg_partitions[0]
    key = bucket.key_for(members, positional=False)
    local = bucket.entries.get(key) if key is not None else None
    if local is None or not has_perfect_matching(members, key, partition.cell_of):
        raise MatchError(f"No {what} constraint is in one-to-one correspondence with {','.join(map(str, members))}")
    return local, canonical_correspondence(members, key, partition.cell_of)


def match_unordered(symbol: Symbol, rooted: bool, args: Sequence[Symbol], constraints: ConstraintSet) -> Match:
    """The constraint whose cells correspond one-to-one with the arguments.

    The argument cells of one constraint come from a single partition, so the sorted cell tuple of the
    arguments identifies the only candidate.
    """
    assert_true(len(args) >= 1, IllegalArgumentException(f"{symbol} has no arguments to match"))
    group = constraints.node_groups.get((UNORDERED_FAMILY, rooted, len(args)))
    if group is None:
        raise MatchError(f"No unordered constraint for {'root' if rooted else 'internal'} arity {len(args)}")
    return _match_non_positional(_bucket(group, symbol, "unordered"), args, "unordered")


def match_parent(child: Symbol, parents: Sequence[Symbol], constraints: ConstraintSet) -> Match:
    """The parent constraint whose child cell holds `child` and whose parent cells correspond to `parents`"""
    group = constraints.parent_groups.get(len(parents))
    if group is None:
        raise MatchError(f"No parent constraint for {len(parents)} parents")
    return _match_non_positional(_bucket(group, child, "parent"), parents, "parent")


def match_sequence(position: int, entries: Sequence[Symbol], is_last: bool, constraints: ConstraintSet) -> Match:
    """The sequence constraint of this position and termination whose slot cells hold the entries"""
    bucket = constraints.sequence_buckets.get((position, is_last))
    if bucket is None:
        raise MatchError(f"No {'terminated' if is_last else 'continuing'} sequence constraint at position {position}")
    key = bucket.key_for(entries, positional=True)
    local = bucket.entries.get(key) if key is not None else None
    if local is None:
        raise MatchError(f"No sequence constraint at position {position} matches {','.join(map(str, entries))}")
    return local, tuple(range(len(entries) + 1))

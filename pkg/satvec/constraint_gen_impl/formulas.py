from math import comb
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional

from satvec.constraint_gen_impl.constraints import (
    ORDERED_FAMILY,
    PARENT_FAMILY,
    SEQUENCE_FAMILY,
    UNORDERED_FAMILY,
)
from satvec.constraint_gen_impl.node_constraints import arity_groups
from satvec.signature import Signature
from satvec.symbols import Symbol

if TYPE_CHECKING:
    from satvec.constraint_gen_impl.generate import Widths


def ordered_count(w: int, m: int, n: int) -> int:
    """|C_ord| = w·Σ_{i=1..m} w^i + w·Σ_{i=1..n} w^i, when every arity group is full.

    >>> ordered_count(2, 1, 1)
    8
    """
    return w * sum(w**i for i in range(1, m + 1)) + w * sum(w**i for i in range(1, n + 1))


def unordered_group_count(w: int, arity: int) -> int:
    """Constraints generated for one full unordered arity group.

    >>> unordered_group_count(2, 3)
    8
    """
    return w * comb(arity + w - 1, arity)


def unordered_count(w: int, m: int, n: int) -> int:
    """|C_unord| = w·Σ_{i=1..m} C(i+w-1, i) + w·Σ_{i=1..n} C(i+w-1, i)

    >>> unordered_count(2, 1, 1)
    8
    """
    return sum(unordered_group_count(w, i) for i in range(1, m + 1)) + sum(
        unordered_group_count(w, i) for i in range(1, n + 1)
    )


def parent_count(w: int, max_parents: int, c: int) -> int:
    """|C_par| = w·Σ_{i=1..max_parents} C(i+c-1, i)

    >>> parent_count(2, 1, 2)
    4
    """
    return w * sum(comb(i + c - 1, i) for i in range(1, max_parents + 1))


def sequence_count(w: int, length: int, slots: int) -> int:
    """|C_seq| = w^s (first position, terminated) + w^s (first position, continuing)
    + 2·(l-2)·w^s (middle positions) + w^s (last position); w^s alone when l = 1.

    >>> sequence_count(2, 3, 1)
    10
    >>> sequence_count(5, 150, 1)
    1495
    >>> sequence_count(5, 1, 1)
    5
    """
    if length == 1:
        return w**slots
    return w**slots + 2 * w**slots + 2 * (length - 2) * w**slots


def _cells(w: int, size: int) -> int:
    return min(w, size)


def argument_cells(signature: Signature, w: int) -> int:
    """Number of cells of one argument split of Ω"""
    omega = signature.effective_internals
    if signature.isolate_negation and signature.negation is not None:
        negations = [s for s in omega if signature.is_negation(s)]
        if negations:
            return _cells(w, len(omega) - len(negations)) + 1
    return _cells(w, len(omega))


def expected_family_sizes(signature: Signature, widths: "Widths") -> Dict[str, int]:
    """The size of every family of one parallel set, computed from the cell counts each split produces.

    Unlike the closed forms above, this holds for groups smaller than the width too.
    """
    sizes = {family: 0 for family in (ORDERED_FAMILY, UNORDERED_FAMILY, PARENT_FAMILY, SEQUENCE_FAMILY)}
    for rooted in (True, False):
        for arity, symbols in arity_groups(signature, rooted, ordered=True):
            sizes[ORDERED_FAMILY] += _cells(widths.ordered, len(symbols)) * argument_cells(
                signature, widths.ordered
            ) ** arity
        for arity, symbols in arity_groups(signature, rooted, ordered=False):
            cells = argument_cells(signature, widths.unordered)
            sizes[UNORDERED_FAMILY] += _cells(widths.unordered, len(symbols)) * comb(arity + cells - 1, arity)
    if widths.parent > 0:
        children = argument_cells(signature, widths.parent)
        parents = _cells(widths.parent_cells, len(signature.parent_symbols))
        sizes[PARENT_FAMILY] = children * sum(
            comb(i + parents - 1, i) for i in range(1, signature.max_parents + 1)
        )
    sequence = signature.sequence
    if sequence is not None:
        per_variant = 1
        for name in sequence.slot_pools:
            per_variant *= _cells(widths.sequence, signature.pool(name).size)
        sizes[SEQUENCE_FAMILY] = per_variant * (2 * sequence.length - 1)
    return sizes


def short_groups(signature: Signature, widths: "Widths") -> List[str]:
    """Descriptions of the symbol groups too small to fill their width, for which the closed forms do not hold"""
    short = []

    def check(name: str, symbols: Iterable[Symbol], w: int) -> None:
        size = len(list(symbols))
        if 0 < size < w:
            short.append(f"{name}: {size} symbols for width {w}")

    for rooted in (True, False):
        kind = "root" if rooted else "internal"
        for ordered, w in ((True, widths.ordered), (False, widths.unordered)):
            for arity, symbols in arity_groups(signature, rooted, ordered):
                check(f"{kind} {'ordered' if ordered else 'unordered'} arity {arity}", symbols, w)
    check("Ω", signature.effective_internals, max(widths.ordered, widths.unordered, widths.parent))
    if widths.parent > 0:
        check("Σ_par", signature.parent_symbols, widths.parent_cells)
    if signature.sequence is not None:
        for name in signature.sequence.slot_pools:
            check(f"pool {name}", signature.pool(name).symbols, widths.sequence)
    return short


def _contiguous_arity(signature: Signature, rooted: bool, ordered: bool) -> Optional[int]:
    """The largest arity of a group when every arity below it has a group too, 0 without groups"""
    arities = [arity for arity, _ in arity_groups(signature, rooted, ordered)]
    return len(arities) if arities == list(range(1, len(arities) + 1)) else None


def closed_form_sizes(signature: Signature, widths: "Widths") -> Dict[str, Optional[int]]:
    """The closed-form size of every family of one parallel set, None where it does not apply.

    Node families need an arity group for every arity up to the largest one and no isolated negation;
    every family needs its groups to fill their widths.
    """
    full = not short_groups(signature, widths)
    isolated = signature.isolate_negation and signature.negation is not None
    sizes: Dict[str, Optional[int]] = {}
    for family, w, ordered, count in (
        (ORDERED_FAMILY, widths.ordered, True, ordered_count),
        (UNORDERED_FAMILY, widths.unordered, False, unordered_count),
    ):
        m = _contiguous_arity(signature, True, ordered)
        n = _contiguous_arity(signature, False, ordered)
        sizes[family] = count(w, m, n) if full and not isolated and m is not None and n is not None else None
    if widths.parent == 0:
        sizes[PARENT_FAMILY] = 0
    else:
        sizes[PARENT_FAMILY] = parent_count(widths.parent, signature.max_parents, widths.parent_cells) if full else None
    sequence = signature.sequence
    if sequence is None:
        sizes[SEQUENCE_FAMILY] = 0
    else:
        sizes[SEQUENCE_FAMILY] = sequence_count(widths.sequence, sequence.length, sequence.slots) if full else None
    return sizes

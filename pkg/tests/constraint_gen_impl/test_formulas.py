from typing import List

import pytest

from satvec.constraint_gen import (
    DEFAULT_WIDTHS,
    SENTENCE_WIDTHS,
    Widths,
    closed_form_sizes,
    expected_family_sizes,
    ordered_count,
    parent_count,
    sequence_count,
    short_groups,
    unordered_count,
)
from satvec.constraint_gen_impl.constraints import ORDERED_FAMILY, PARENT_FAMILY, SEQUENCE_FAMILY, UNORDERED_FAMILY
from satvec.constraint_system import build_system
from satvec.exceptions import IllegalArgumentException
from satvec.formats import sentence_signature
from satvec.random_stream import RandomStream
from satvec.signature import Signature, declare_signature
from satvec.symbols import Symbol


def full_signature(w: int, m: int, n: int, max_parents: int = 1) -> Signature:
    """w ordered and w unordered symbols for every root arity 1..m and internal arity 1..n, w leaves"""
    roots: List[Symbol] = []
    internals: List[Symbol] = []
    for arity in range(1, m + 1):
        roots += [Symbol(f"r{arity}_{i}", arity) for i in range(w)]
        roots += [Symbol(f"ru{arity}_{i}", arity, ordered=False) for i in range(w)]
    for arity in range(1, n + 1):
        internals += [Symbol(f"f{arity}_{i}", arity) for i in range(w)]
        internals += [Symbol(f"fu{arity}_{i}", arity, ordered=False) for i in range(w)]
    internals += [Symbol(f"c{i}") for i in range(w)]
    return declare_signature(roots, internals, max_parents=max_parents)


@pytest.mark.parametrize("w,m,n,max_parents", [(2, 1, 1, 1), (2, 2, 1, 2), (3, 1, 2, 2), (3, 2, 2, 3), (4, 1, 1, 2)])
def test_family_sizes_match_the_closed_forms_when_groups_are_full(w: int, m: int, n: int, max_parents: int):
    signature = full_signature(w, m, n, max_parents)
    widths = Widths(ordered=w, unordered=w, parent=w, parent_cells=w)
    assert short_groups(signature, widths) == []
    system = build_system(signature, widths, t=2, seed=w * 100 + m * 10 + n)
    for constraint_set in system.sets:
        counts = constraint_set.family_counts()
        assert counts[ORDERED_FAMILY] == ordered_count(w, m, n)
        assert counts[UNORDERED_FAMILY] == unordered_count(w, m, n)
        assert counts[PARENT_FAMILY] == parent_count(w, max_parents, w)
        assert closed_form_sizes(signature, widths) == {**counts, SEQUENCE_FAMILY: 0}


def test_family_sizes_match_the_cell_counts_on_random_signatures():
    rng = RandomStream(2024)
    for _ in range(20):
        draw = rng.generator.integers
        roots = [Symbol(f"r{i}", int(draw(1, 3))) for i in range(int(draw(1, 5)))]
        internals = [Symbol(f"f{i}", int(draw(1, 3)), ordered=bool(draw(0, 2))) for i in range(int(draw(0, 5)))]
        internals += [Symbol(f"c{i}") for i in range(int(draw(1, 6)))]
        signature = declare_signature(roots, internals, max_parents=int(draw(1, 4)))
        widths = Widths(ordered=int(draw(1, 6)), unordered=int(draw(1, 6)), parent=int(draw(1, 6)), parent_cells=2)
        system = build_system(signature, widths, t=1, seed=int(draw(0, 1000)))
        expected = expected_family_sizes(signature, widths)
        counts = system.sets[0].family_counts()
        for family, size in expected.items():
            assert counts.get(family, 0) == size


def test_sentence_system_sizes():
    signature = sentence_signature(20000, 150)
    system = build_system(signature, SENTENCE_WIDTHS, t=1)
    assert system.symbol_count == 20150
    assert system.constraint_count == 1495
    assert system.sets[0].family_counts() == {SEQUENCE_FAMILY: sequence_count(5, 150, 1)}


def test_parent_width_zero_needs_single_parents():
    signature = declare_signature(["f/2"], ["a/0"], max_parents=2)
    with pytest.raises(IllegalArgumentException):
        build_system(signature, Widths(parent=0))
    assert build_system(signature, DEFAULT_WIDTHS).sets[0].has_parent_constraints


def test_closed_forms_need_full_groups():
    signature = declare_signature(["f/2"], ["a/0", "b/0"])
    sizes = closed_form_sizes(signature, Widths(ordered=2, unordered=2, parent=2, parent_cells=1))
    assert sizes == {ORDERED_FAMILY: None, UNORDERED_FAMILY: None, PARENT_FAMILY: None, SEQUENCE_FAMILY: 0}
    assert closed_form_sizes(signature, Widths(ordered=1, unordered=1, parent=0, parent_cells=1))[PARENT_FAMILY] == 0


def test_closed_forms_need_every_arity_below_the_largest():
    signature = declare_signature(["f/2", "h/2"], ["a/0", "b/0"])
    assert closed_form_sizes(signature, Widths(ordered=1, unordered=1, parent=1, parent_cells=1))[ORDERED_FAMILY] is None


def test_sequence_closed_form():
    sizes = closed_form_sizes(sentence_signature(20000, 150), SENTENCE_WIDTHS)
    assert sizes[SEQUENCE_FAMILY] == sequence_count(5, 150, 1)
    assert sizes[PARENT_FAMILY] == 0

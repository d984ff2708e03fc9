import pytest

from satvec.constraint_gen import Widths
from satvec.constraint_gen_impl.constraints import OrderedConstraint, ParentConstraint, UnorderedConstraint
from satvec.constraint_system import ConstraintSystem, build_system
from satvec.encoder import match_ordered, match_parent, match_unordered
from satvec.encoder_impl.matching import canonical_correspondence, has_perfect_matching
from satvec.exceptions import MatchError
from satvec.signature import declare_signature
from satvec.symbols import Symbol
from tests.utils import A, B, F

OR = Symbol("or", 2, ordered=False)


@pytest.fixture(scope="module")
def or_system() -> ConstraintSystem:
    return build_system(declare_signature([OR], ["a/0", "b/0"]), Widths(parent_cells=1), t=1, seed=5)


def test_perfect_matching_needs_one_slot_per_symbol():
    cell_of = {A: 0, B: 1}.get
    assert has_perfect_matching([B, A], [0, 1], cell_of)
    assert has_perfect_matching([B, A, B], [1, 0, 1], cell_of)
    assert not has_perfect_matching([A, A], [0, 1], cell_of)
    assert not has_perfect_matching([A], [0, 0], cell_of)


def test_canonical_correspondence_takes_symbols_in_the_fixed_order():
    cell_of = {A: 0, B: 1}.get
    assert canonical_correspondence([B, A], [0, 1], cell_of) == (1, 0)
    assert canonical_correspondence([B, A, B], [1, 0, 1], cell_of) == (0, 1, 2)


def test_match_ordered(pair_system: ConstraintSystem):
    constraints = pair_system.sets[0]
    local, slots = match_ordered(F, True, [A, B], constraints)
    constraint = constraints[local]
    assert isinstance(constraint, OrderedConstraint)
    assert constraint.rooted
    assert constraint.arity == 2
    assert slots == (0, 1)
    assert match_ordered(F, True, [B, A], constraints)[0] != local


def test_match_ordered_without_a_group_fails(pair_system: ConstraintSystem):
    with pytest.raises(MatchError):
        match_ordered(F, False, [A, B], pair_system.sets[0])
    with pytest.raises(MatchError):
        match_ordered(Symbol("h", 1), True, [A], pair_system.sets[0])


def test_match_unordered_ignores_argument_order(or_system: ConstraintSystem):
    constraints = or_system.sets[0]
    local, slots = match_unordered(OR, True, [A, B], constraints)
    assert isinstance(constraints[local], UnorderedConstraint)
    swapped, swapped_slots = match_unordered(OR, True, [B, A], constraints)
    assert swapped == local
    assert sorted(slots) == sorted(swapped_slots) == [0, 1]


def test_match_parent(pair_system: ConstraintSystem):
    constraints = pair_system.sets[1]
    local, slots = match_parent(A, [F], constraints)
    assert isinstance(constraints[local], ParentConstraint)
    assert slots == (0,)
    with pytest.raises(MatchError):
        match_parent(A, [F, F], constraints)

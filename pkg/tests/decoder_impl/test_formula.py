import itertools

import pytest
from pysat.formula import IDPool
from pysat.solvers import Solver

from satvec.decoder_impl.formula import PAIRWISE, exactly_k, exactly_one
from satvec.exceptions import IllegalArgumentException


def _satisfiable_assignments(clauses, lits):
    """The assignments of `lits` that extend to a model of the clauses"""
    result = []
    with Solver(name="minisat22", bootstrap_with=clauses) as solver:
        for values in itertools.product((False, True), repeat=len(lits)):
            assumptions = [lit if value else -lit for lit, value in zip(lits, values)]
            if solver.solve(assumptions=assumptions):
                result.append(values)
    return result


@pytest.mark.parametrize("encoding", [PAIRWISE, "seqcounter", "totalizer"])
def test_exactly_one(encoding: str):
    lits = [1, 2, 3, 4]
    clauses = exactly_one(lits, IDPool(start_from=5), encoding)
    assert all(sum(values) == 1 for values in _satisfiable_assignments(clauses, lits))
    assert len(_satisfiable_assignments(clauses, lits)) == 4


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_exactly_k(k: int):
    lits = [1, 2, 3, 4]
    clauses = exactly_k(lits, k, IDPool(start_from=5), "seqcounter")
    assignments = _satisfiable_assignments(clauses, lits)
    assert all(sum(values) == k for values in assignments)
    assert len(assignments) == len(list(itertools.combinations(lits, k)))


def test_impossible_counts_give_a_contradiction():
    pool = IDPool(start_from=3)
    assert _satisfiable_assignments(exactly_one([], pool, reason="empty"), []) == []
    assert _satisfiable_assignments(exactly_k([1, 2], 3, pool, reason="too many"), [1, 2]) == []


def test_unknown_cardinality_encoding():
    with pytest.raises(IllegalArgumentException):
        exactly_k([1, 2, 3], 2, IDPool(start_from=4), "no-such-encoding")

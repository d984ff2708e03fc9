from pathlib import Path

import numpy as np
import pytest
from pysat.formula import CNF

from satvec.constraint_gen import Widths
from satvec.constraint_system import ConstraintSystem, build_system
from satvec.decoder import EAGER, LAZY, OFF, DecodeOptions, Decoder, decode, decode_all, induced_assignment, write_dimacs
from satvec.encoder import encode
from satvec.exceptions import (
    DecodingTimeout,
    IllegalArgumentException,
    InvalidReconstruction,
    SystemMismatchError,
    UnsatisfiableError,
)
from satvec.graph import Graph, canonical_text, term
from satvec.random_stream import RandomStream
from satvec.signature import declare_signature
from satvec.symbols import Symbol
from satvec.vectors import CountVector, zero_vector
from tests.utils import A, B, F, G, f_of, random_tree, tiny_trees

R = Symbol("r", 1)
UF = Symbol("f", 1)
UG = Symbol("g", 1)


@pytest.fixture(scope="module")
def chain_system() -> ConstraintSystem:
    """Every unary internal node matches the same constraint, so f and g can close a cycle"""
    signature = declare_signature(["r/1"], ["f/1", "g/1", "a/0"])
    return build_system(signature, Widths(ordered=1, unordered=1, parent=0, parent_cells=1, sequence=1), t=1)


def test_decode_f_a_b(pair_system: ConstraintSystem):
    assert canonical_text(decode(encode(f_of(), pair_system), pair_system)) == "f(a,b)"
    assert canonical_text(decode(encode(f_of(B, A), pair_system), pair_system)) == "f(b,a)"


def test_graphs_satisfy_their_own_formula(tree_system: ConstraintSystem):
    decoder = Decoder(tree_system)
    for graph in tiny_trees(2):
        assert decoder.accepts(encode(graph, tree_system), induced_assignment(graph, tree_system))


def test_wrong_assignments_are_rejected(pair_system: ConstraintSystem):
    assignment = induced_assignment(f_of(), pair_system)
    assert not Decoder(pair_system).accepts(encode(f_of(B, A), pair_system), assignment)


@pytest.mark.parametrize("graph", tiny_trees(3), ids=canonical_text)
def test_decoded_graphs_reencode_to_the_input(tree_system: ConstraintSystem, graph: Graph):
    vector = encode(graph, tree_system)
    assert encode(decode(vector, tree_system), tree_system) == vector


def test_every_tree_is_among_the_graphs_of_its_vector(tree_system: ConstraintSystem):
    for graph in tiny_trees(2):
        found = decode_all(encode(graph, tree_system), tree_system)
        assert canonical_text(graph) in {canonical_text(other) for other in found}


@pytest.mark.parametrize("seed", range(8))
def test_random_trees(tree_system: ConstraintSystem, seed: int):
    graph = random_tree(RandomStream(seed), max_nodes=9)
    vector = encode(graph, tree_system)
    decoded = decode(vector, tree_system, DecodeOptions(budget_seconds=60))
    assert encode(decoded, tree_system) == vector


@pytest.mark.parametrize("cycle_mode", [EAGER, LAZY, OFF])
def test_cycle_modes_agree(tree_system: ConstraintSystem, cycle_mode: str):
    graph = Graph.from_terms(term(F, term(G, term(A)), term(G, term(G, term(B)))))
    vector = encode(graph, tree_system)
    assert encode(decode(vector, tree_system, DecodeOptions(cycle_mode=cycle_mode)), tree_system) == vector


def test_cycle_nogoods_exclude_cyclic_models(chain_system: ConstraintSystem):
    graph = Graph.from_terms(term(R, term(UF, term(UG, term(A)))))
    vector = encode(graph, chain_system)
    off = Decoder(chain_system, DecodeOptions(cycle_mode=OFF))
    formula = off.formula(vector)
    shortcut = next(var for t, var in formula.variables.items() if t.s == A and t.p == R)
    model = off.solve(formula, [shortcut])
    assert model is not None
    with pytest.raises(InvalidReconstruction):
        off.model_to_graph(formula, model)

    eager = Decoder(chain_system, DecodeOptions(cycle_mode=EAGER))
    formula = eager.formula(vector)
    assert eager.stats.cycles >= 1
    shortcut = next(var for t, var in formula.variables.items() if t.s == A and t.p == R)
    assert eager.solve(formula, [shortcut]) is None


@pytest.mark.parametrize("cycle_mode", [EAGER, LAZY, OFF])
def test_chain_decodes_in_every_cycle_mode(chain_system: ConstraintSystem, cycle_mode: str):
    vector = encode(Graph.from_terms(term(R, term(UF, term(UG, term(A))))), chain_system)
    decoded = decode(vector, chain_system, DecodeOptions(cycle_mode=cycle_mode))
    assert canonical_text(decoded) in {"r(f(g(a)))", "r(g(f(a)))"}


def test_zero_vector_decodes_to_the_empty_graph(pair_system: ConstraintSystem):
    assert decode(zero_vector(pair_system), pair_system).is_empty


def test_vector_without_a_graph(pair_system: ConstraintSystem):
    counts = np.zeros(pair_system.length, dtype=np.int64)
    counts[: pair_system.symbol_count] = 1
    with pytest.raises(UnsatisfiableError):
        decode(CountVector(counts, pair_system.digest), pair_system)


def test_vector_of_another_system(pair_system: ConstraintSystem, tree_system: ConstraintSystem):
    with pytest.raises(SystemMismatchError):
        decode(encode(f_of(), pair_system), tree_system)


def test_decode_all_lists_distinct_graphs(chain_system: ConstraintSystem):
    vector = encode(Graph.from_terms(term(R, term(UF, term(UG, term(A))))), chain_system)
    graphs = decode_all(vector, chain_system)
    assert sorted(canonical_text(g) for g in graphs) == ["r(f(g(a)))", "r(g(f(a)))"]
    assert len(decode_all(vector, chain_system, limit=1)) == 1


def test_masks_are_stripped_unless_kept(tree_system: ConstraintSystem):
    vector = encode(Graph.from_terms(term(G, term(G, term(A)))), tree_system)
    assert not any(s.is_masked for s in decode(vector, tree_system).symbols)
    kept = decode(vector, tree_system, DecodeOptions(keep_masks=True))
    assert Symbol("g", 1, arg_position=1) in kept.symbols


def test_stats_describe_the_last_decode(tree_system: ConstraintSystem):
    decoder = Decoder(tree_system)
    decoder.decode(encode(Graph.from_terms(term(F, term(A), term(G, term(B)))), tree_system))
    stats = decoder.stats
    assert stats.tuples > 0
    assert stats.solve_calls >= 1
    assert stats.clauses["S"] > 0
    assert {"tuples", "formula", "solve"} <= set(stats.seconds)


def test_budget_overrun(tree_system: ConstraintSystem):
    vector = encode(Graph.from_terms(term(F, term(A), term(B))), tree_system)
    decoder = Decoder(tree_system, DecodeOptions(budget_seconds=1e-9))
    with pytest.raises(DecodingTimeout):
        decoder.decode(vector)
    assert decoder.stats.tuples > 0


def test_eager_cycles_fall_back_to_lazy_past_the_cap(chain_system: ConstraintSystem):
    vector = encode(Graph.from_terms(term(R, term(UF, term(UG, term(A))))), chain_system)
    decoder = Decoder(chain_system, DecodeOptions(cycle_mode=EAGER, cycle_cap=0))
    decoder.formula(vector)
    assert decoder.stats.lazy_fallback
    assert decoder.stats.clauses["N"] == 0
    eager = Decoder(chain_system)
    eager.formula(vector)
    assert not eager.stats.lazy_fallback
    assert eager.stats.clauses["N"] > 0


def test_shared_subtrees_decode_with_eager_cycles(tree_system: ConstraintSystem):
    graph = Graph.from_terms(term(F, term(G, term(G, term(A))), term(G, term(G, term(A)))))
    vector = encode(graph, tree_system)
    decoder = Decoder(tree_system, DecodeOptions(budget_seconds=60))
    assert encode(decoder.decode(vector), tree_system) == vector


def test_invalid_options():
    with pytest.raises(IllegalArgumentException):
        DecodeOptions(cycle_mode="sometimes")
    with pytest.raises(IllegalArgumentException):
        DecodeOptions(budget_seconds=0)


def test_write_dimacs(pair_system: ConstraintSystem, tmp_path: Path):
    decoder = Decoder(pair_system)
    formula = decoder.formula(encode(f_of(), pair_system))
    path = tmp_path / "f_a_b.cnf"
    write_dimacs(formula, path)
    cnf = CNF(from_file=str(path))
    assert len(cnf.clauses) == len(formula.all_clauses)
    assert (tmp_path / "f_a_b.cnf.vars.json").exists()

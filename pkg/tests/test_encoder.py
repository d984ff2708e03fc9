import pytest

from satvec.constraint_gen_impl.constraints import ParentConstraint
from satvec.constraint_system import ConstraintSystem
from satvec.encoder import decompose, encode
from satvec.exceptions import UnrepresentableGraphError
from satvec.graph import Graph, GraphBuilder, term
from satvec.symbols import Symbol
from tests.utils import A, B, F, G, f_of


def test_f_a_b_has_three_symbols_and_three_constraints_per_set(pair_system: ConstraintSystem):
    vector = encode(f_of(), pair_system)
    assert vector.total == 3 + 3 * pair_system.t
    assert vector.counts[: pair_system.symbol_count].tolist() == [1, 1, 1]
    for set_slice in pair_system.row_slices[1:]:
        assert vector.counts[set_slice].sum() == 3


def test_argument_order_matters_for_ordered_symbols(pair_system: ConstraintSystem):
    assert encode(f_of(A, B), pair_system) != encode(f_of(B, A), pair_system)


def test_node_ids_do_not_matter(pair_system: ConstraintSystem):
    builder = GraphBuilder()
    b = builder.add(B)
    a = builder.add(A)
    builder.add(F, a, b)
    assert encode(builder.build(), pair_system) == encode(f_of(), pair_system)


def test_forest_vectors_add_up(tree_system: ConstraintSystem):
    first = term(F, term(A), term(G, term(B)))
    second = term(G, term(G, term(A)))
    forest = encode(Graph.from_terms(first, second), tree_system)
    separate = encode(Graph.from_terms(first), tree_system).counts + encode(Graph.from_terms(second), tree_system).counts
    assert forest.counts.tolist() == separate.tolist()


def test_masks_are_applied_before_matching(tree_system: ConstraintSystem):
    decomposition = decompose(Graph.from_terms(term(G, term(G, term(A)))), tree_system)
    assert Symbol("g", 1, arg_position=1) in decomposition.graph.symbols
    assert decomposition.symbol_counts[G] == 1


def test_every_edge_matches_one_parent_constraint(pair_system: ConstraintSystem):
    decomposition = decompose(f_of(), pair_system)
    for set_index, matches in enumerate(decomposition.parent_matches):
        assert sorted(matches) == [0, 1]
        for match in matches.values():
            local = pair_system.locate(match.constraint)
            assert local[0] == set_index
            assert isinstance(pair_system.sets[set_index][local[1]], ParentConstraint)


@pytest.mark.parametrize(
    "graph",
    [
        Graph.from_terms(term(Symbol("h", 1), term(A))),
        Graph.from_terms(term(A)),
        Graph((F, A), ((1, 1), ())),
        Graph((F, A, B), ((1, 2), (0,), ())),
    ],
    ids=["unknown symbol", "leaf root", "shared argument", "arity mismatch"],
)
def test_unrepresentable_graphs_are_rejected(pair_system: ConstraintSystem, graph: Graph):
    with pytest.raises(UnrepresentableGraphError):
        encode(graph, pair_system)


def test_empty_graph_encodes_to_zero(pair_system: ConstraintSystem):
    assert encode(Graph(), pair_system).total == 0

import numpy as np
import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.encoder import encode
from satvec.exceptions import IllegalArgumentException, SystemMismatchError
from satvec.graph import Graph, term
from satvec.similarity import (
    DOT,
    RowMatrix,
    bag_of_words_matrix,
    bag_of_words_sim,
    blended_sim,
    knn_classify,
    nearest,
    structural_matrix,
    structural_sim,
    to_row_matrix,
)
from tests.utils import A, B, F, G, tiny_trees


@pytest.fixture(scope="module")
def matrices(tree_system: ConstraintSystem):
    return [to_row_matrix(encode(graph, tree_system), tree_system) for graph in tiny_trees(2)]


def test_row_matrix_layout(tree_system: ConstraintSystem):
    m = to_row_matrix(encode(Graph.from_terms(term(F, term(A), term(B))), tree_system), tree_system)
    assert m.t == tree_system.t
    assert m.shape == (tree_system.symbol_count, *(len(s) for s in tree_system.sets))
    assert m.flatten().sum() == 3 + 3 * tree_system.t
    assert m.truncate(1).shape == m.shape[:2]


def test_self_similarity_is_one(matrices):
    for m in matrices:
        assert structural_sim(m, m) == pytest.approx(1.0)
        assert bag_of_words_sim(m, m) == pytest.approx(1.0)


def test_similarities_are_symmetric_and_bounded(matrices):
    for m in matrices[:6]:
        for n in matrices:
            similarity = structural_sim(m, n)
            assert similarity == pytest.approx(structural_sim(n, m))
            assert 0.0 <= similarity <= bag_of_words_sim(m, n) + 1e-12


def test_same_symbols_different_structure():
    m = RowMatrix((np.array([1.0, 1.0]), np.array([1.0, 0.0])), "x")
    n = RowMatrix((np.array([1.0, 1.0]), np.array([0.0, 1.0])), "x")
    assert bag_of_words_sim(m, n) == pytest.approx(1.0)
    assert structural_sim(m, n) == pytest.approx(0.0)
    assert blended_sim(m, n, 0.0) == pytest.approx(1.0)
    assert blended_sim(m, n, 1.0) == pytest.approx(0.0)
    assert blended_sim(m, n, 0.3) == pytest.approx(0.7)


def test_dot_similarity():
    m = RowMatrix((np.array([1.0, 2.0]), np.array([3.0])), "x")
    assert structural_sim(m, m, DOT) == pytest.approx(5.0)
    with pytest.raises(IllegalArgumentException):
        structural_sim(m, m, "euclid")


def test_matrices_of_different_systems_are_not_compared():
    m = RowMatrix((np.array([1.0]), np.array([1.0])), "x")
    with pytest.raises(SystemMismatchError):
        structural_sim(m, RowMatrix(m.rows, "y"))
    with pytest.raises(SystemMismatchError):
        bag_of_words_sim(m, RowMatrix((np.array([1.0]), np.array([1.0, 0.0])), "x"))


def test_lambda_outside_the_unit_interval():
    m = RowMatrix((np.array([1.0]), np.array([1.0])), "x")
    with pytest.raises(IllegalArgumentException):
        blended_sim(m, m, 1.5)


def test_pairwise_matrices_match_the_scalar_similarities(matrices):
    structural = structural_matrix(matrices)
    bag_of_words = bag_of_words_matrix(matrices)
    for i, m in enumerate(matrices):
        for j, n in enumerate(matrices):
            assert structural[i, j] == pytest.approx(structural_sim(m, n))
            assert bag_of_words[i, j] == pytest.approx(bag_of_words_sim(m, n))


def test_nearest_and_knn(tree_system: ConstraintSystem):
    def matrix(graph: Graph) -> RowMatrix:
        return to_row_matrix(encode(graph, tree_system), tree_system)

    training = [
        (matrix(Graph.from_terms(term(F, term(A), term(B)))), "pair"),
        (matrix(Graph.from_terms(term(G, term(G, term(A))))), "chain"),
        (matrix(Graph.from_terms(term(G, term(G, term(G, term(B)))))), "chain"),
    ]
    query = matrix(Graph.from_terms(term(G, term(G, term(B)))))
    assert nearest(query, [m for m, _ in training], 0.5, k=3)[-1][0] == 0
    assert knn_classify(query, training, 0.5) == "chain"
    assert knn_classify(query, training, 0.5, k=3) == "chain"
    with pytest.raises(IllegalArgumentException):
        knn_classify(query, [], 0.5)
    with pytest.raises(IllegalArgumentException):
        knn_classify(query, training, 0.5, k=0)

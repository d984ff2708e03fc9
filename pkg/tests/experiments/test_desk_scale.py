import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.decoder import DecodeOptions, decode
from satvec.encoder import encode
from satvec.exceptions import DecodingError
from satvec.experiments import CategorizationOptions, RoundtripOptions, categorize, roundtrip
from satvec.experiments.report import CORRECT, INCORRECT, UNREPRESENTABLE
from satvec.formats import synthetic_clause_corpus
from satvec.graph import Graph, canonical_text
from satvec.random_stream import RandomStream
from tests.utils import random_tree, tiny_trees

WORDS = (
    "the a cat dog bird saw chased heard near under house garden river what which states border city "
    "big small old new green quickly slowly ?"
).split()


def random_sentences(count: int, seed: int):
    generator = RandomStream(seed).generator
    sentences = []
    for _ in range(count):
        length = int(generator.integers(3, 11))
        sentences.append(" ".join(WORDS[int(i)] for i in generator.integers(len(WORDS), size=length)))
    return sentences


def test_random_trees_use_their_node_budget():
    sizes = [random_tree(RandomStream(seed), max_nodes=12).node_count for seed in range(40)]
    assert max(sizes) <= 12
    assert max(sizes) > 8
    assert min(sizes) >= 2


def test_masked_random_trees_come_back(tree_system: ConstraintSystem):
    options = DecodeOptions(budget_seconds=5, verify=True)
    total = 40
    correct = 0
    for seed in range(total):
        graph = random_tree(RandomStream(seed), max_nodes=12)
        vector = encode(graph, tree_system)
        try:
            decoded = decode(vector, tree_system, options)
        except DecodingError:
            continue
        assert encode(decoded, tree_system) == vector
        correct += canonical_text(decoded) == canonical_text(graph)
    assert correct >= 0.95 * total


@pytest.mark.parametrize("graph", tiny_trees(3), ids=canonical_text)
def test_every_small_tree_decodes_to_itself(tree_system: ConstraintSystem, graph: Graph):
    assert canonical_text(decode(encode(graph, tree_system), tree_system)) == canonical_text(graph)


def test_sentence_accuracy_grows_with_the_parallel_sets(sentence_system: ConstraintSystem):
    sentences = random_sentences(12, seed=8)
    options = RoundtripOptions(budget_seconds=5, progress=False)
    correct = [roundtrip(sentences, sentence_system.truncate(t), options).counts[CORRECT] for t in range(1, 5)]
    assert correct == sorted(correct)
    assert correct[-1] >= 0.95 * len(sentences)


@pytest.fixture(scope="module")
def clauses():
    return [text for text, _ in synthetic_clause_corpus(classes=5, size=20, seed=1)]


def test_clause_roundtrip_without_verification(clause_system: ConstraintSystem, clauses):
    report = roundtrip(clauses, clause_system, RoundtripOptions(budget_seconds=30, verify=False, progress=False))
    representable = report.total - report.counts[UNREPRESENTABLE]
    assert representable >= 8
    assert report.counts[CORRECT] >= 0.6 * representable
    assert report.counts[INCORRECT] <= 0.1 * representable


def test_verified_clause_roundtrip_is_never_incorrect(clause_system: ConstraintSystem, clauses):
    report = roundtrip(clauses, clause_system, RoundtripOptions(budget_seconds=30, verify=True, progress=False))
    assert report.counts[INCORRECT] == 0


def test_blended_similarity_beats_bag_of_words(clause_system: ConstraintSystem):
    corpus = synthetic_clause_corpus(classes=5, size=100, seed=6)
    items, labels = [text for text, _ in corpus], [label for _, label in corpus]
    report = categorize(items, labels, clause_system, CategorizationOptions(folds=5, ts=(2,), progress=False))
    curve = report.accuracy[2]
    assert sorted(curve) == list(report.lambdas)
    assert max(accuracy for lam, accuracy in curve.items() if lam > 0) >= curve[0.0]

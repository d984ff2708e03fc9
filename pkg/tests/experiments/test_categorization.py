import json

import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.exceptions import IllegalArgumentException
from satvec.experiments import CategorizationOptions, categorize
from satvec.experiments.categorization import _folds, encode_corpus
from satvec.formats import synthetic_clause_corpus
from tests.utils import captured_output


@pytest.fixture(scope="module")
def corpus():
    return synthetic_clause_corpus(classes=2, size=24, seed=3)


def test_folds_partition_the_items():
    folds = _folds(11, 3, seed=2)
    tests = [test for _, test in folds]
    assert sorted(i for test in tests for i in test) == list(range(11))
    assert sorted(len(test) for test in tests) == [3, 4, 4]
    for training, test in folds:
        assert set(training).isdisjoint(test)
        assert len(training) + len(test) == 11
    assert folds == _folds(11, 3, seed=2)
    assert _folds(4, 1, seed=0) == [([0, 1, 2, 3], [0, 1, 2, 3])]


def test_encode_corpus_drops_duplicates(clause_system: ConstraintSystem):
    items = ["p(X) | q(a)", "q(a) | p(Y)", "r(b)", "p(a, b, c, d)"]
    matrices, labels, skipped = encode_corpus(items, ["x", "x", "y", "y"], clause_system)
    assert len(matrices) == 2
    assert labels == ["x", "y"]
    assert skipped == 2


def test_training_on_the_test_set_is_perfect_for_structure(clause_system: ConstraintSystem, corpus):
    items, labels = [text for text, _ in corpus], [label for _, label in corpus]
    report = categorize(
        items, labels, clause_system, CategorizationOptions(lambdas=(0.0, 1.0), folds=1, progress=False)
    )
    assert sorted(report.accuracy) == [1, 2]
    assert report.accuracy[2][1.0] == 100.0
    assert report.items + report.skipped == len(items)
    assert report.best_lambda(2) in (0.0, 1.0)


def test_report_output(clause_system: ConstraintSystem, corpus):
    items, labels = [text for text, _ in corpus], [label for _, label in corpus]
    report = categorize(
        items, labels, clause_system, CategorizationOptions(lambdas=(0.0, 0.5), folds=3, ts=(2,), progress=False)
    )
    summary = json.loads(report.to_json())
    assert list(summary["accuracy"]) == ["2"]
    assert set(summary["accuracy"]["2"]) == {"0.0", "0.5"}
    assert all(0.0 <= acc <= 100.0 for acc in report.accuracy[2].values())
    with captured_output() as (stdout, stderr):
        report.display()
    assert "3-fold accuracy of 1-NN" in stdout.getvalue()
    assert "t=2" in stdout.getvalue()


def test_folds_are_reproducible(clause_system: ConstraintSystem, corpus):
    items, labels = [text for text, _ in corpus], [label for _, label in corpus]
    options = CategorizationOptions(lambdas=(0.3,), folds=4, seed=9, ts=(1,), progress=False)
    assert categorize(items, labels, clause_system, options).accuracy == categorize(items, labels, clause_system, options).accuracy


def test_invalid_inputs(clause_system: ConstraintSystem):
    with pytest.raises(IllegalArgumentException):
        CategorizationOptions(lambdas=(1.5,))
    with pytest.raises(IllegalArgumentException):
        CategorizationOptions(folds=0)
    with pytest.raises(IllegalArgumentException):
        categorize(["p(a)"], ["x", "y"], clause_system)
    with pytest.raises(IllegalArgumentException):
        categorize(["p(a)"], ["x"], clause_system)

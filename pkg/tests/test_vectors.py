import numpy as np
import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.encoder import encode
from satvec.exceptions import IllegalArgumentException, SystemMismatchError
from satvec.vectors import CountVector, vector_from_counts, vector_from_text, zero_vector
from tests.utils import f_of


def test_text_form_reads_back(pair_system: ConstraintSystem):
    vector = encode(f_of(), pair_system)
    assert vector_from_text(vector.to_text(), pair_system) == vector


def test_zero_vector_has_the_system_length(pair_system: ConstraintSystem):
    vector = zero_vector(pair_system)
    assert len(vector) == pair_system.length
    assert vector.total == 0
    assert vector.nonzero() == []


def test_vector_from_counts_checks_the_length(pair_system: ConstraintSystem):
    with pytest.raises(SystemMismatchError):
        vector_from_counts([0, 1], pair_system)
    with pytest.raises(IllegalArgumentException):
        vector_from_counts([0.5] * pair_system.length, pair_system)


def test_vectors_of_another_system_are_rejected(pair_system: ConstraintSystem, tree_system: ConstraintSystem):
    vector = CountVector(np.zeros(pair_system.length, dtype=np.int64), tree_system.digest)
    with pytest.raises(SystemMismatchError):
        vector.check_system(pair_system)
    text = zero_vector(pair_system).to_text().replace(pair_system.digest, "0" * 64)
    with pytest.raises(SystemMismatchError):
        vector_from_text(text, pair_system)


def test_malformed_text_is_rejected():
    with pytest.raises(IllegalArgumentException):
        vector_from_text("not a vector\n")
    with pytest.raises(IllegalArgumentException):
        vector_from_text("satvec-vector v1 abc 3\n3:1\n")
    with pytest.raises(IllegalArgumentException):
        vector_from_text("satvec-vector v1 abc 3\none:1\n")


def test_equality_includes_the_digest():
    counts = np.array([1, 0, 2])
    assert CountVector(counts, "x") == CountVector(counts.copy(), "x")
    assert CountVector(counts, "x") != CountVector(counts, "y")
    assert len({CountVector(counts, "x"), CountVector(counts.copy(), "x")}) == 1

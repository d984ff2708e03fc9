from pathlib import Path

import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.exceptions import IllegalArgumentException
from satvec.experiments.corpus import CLAUSES, SENTENCES, check_labels, codec_for, read_corpus, read_labels
from satvec.formats import SINGLE
from satvec.graph import canonical_text


def test_read_corpus_lines(tmp_path: Path):
    path = tmp_path / "questions.txt"
    path.write_text("What states border Texas ?\n\n  How big is Alaska ?  \n")
    assert read_corpus(path) == ["What states border Texas ?", "How big is Alaska ?"]


def test_read_corpus_tptp(tmp_path: Path):
    path = tmp_path / "axioms.txt"
    path.write_text("% group theory\ncnf(left_identity, axiom, multiply(identity, X) = X).\n")
    assert read_corpus(path) == ["multiply(identity, X) = X"]


def test_read_labels(tmp_path: Path):
    path = tmp_path / "labels.txt"
    path.write_text("GRP\n\nRNG\n")
    assert read_labels(path) == ["GRP", "RNG"]
    check_labels(["a", "b"], ["GRP", "RNG"])
    with pytest.raises(IllegalArgumentException):
        check_labels(["a"], ["GRP", "RNG"])


def test_sentence_codec(sentence_system: ConstraintSystem):
    codec = codec_for(sentence_system)
    assert codec.domain == SENTENCES
    graph = codec.to_graph("What states border Texas ?")
    assert codec.to_text(graph) == "What states border Texas ?"


def test_clause_codec(clause_system: ConstraintSystem):
    codec = codec_for(clause_system)
    assert codec.domain == CLAUSES
    graph = codec.to_graph("p(Y) | ~q(Y, a)")
    assert codec.to_text(graph) == "p(var1) | ~q(var1, a)"
    single = codec_for(clause_system, SINGLE).to_graph("p(Y) | ~q(Y, a)")
    assert "VAR" in canonical_text(single)

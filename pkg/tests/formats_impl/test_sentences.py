import pytest

from satvec.constraint_system import ConstraintSystem
from satvec.decoder import DecodeOptions, decode
from satvec.encoder import encode
from satvec.exceptions import PlaceholderPoolExhausted, UnrepresentableGraphError
from satvec.formats import sentence_signature, sentence_to_tree, sequence_to_tree, tokenize, tree_to_sentence
from satvec.graph import canonical_text, validate
from satvec.signature import PlaceholderBinder

QUESTION = "What states border Texas ?"


def test_sentence_tree_reads_back():
    signature = sentence_signature(20, 8)
    binder = PlaceholderBinder(signature)
    tree = sentence_to_tree(tokenize(QUESTION), signature, binder)
    assert validate(tree, signature) == []
    assert tree_to_sentence(tree, signature, binder) == tokenize(QUESTION)


def test_repeated_words_share_a_placeholder(sentence_system: ConstraintSystem):
    binder = sentence_system.binder()
    tree = sentence_to_tree(tokenize("the cat saw the dog"), sentence_system.signature, binder)
    assert canonical_text(tree) == "f1(word1,f2(word2,f3(word3,f4(word1,f5(word4,EOS)))))"


def test_empty_sequence_is_a_single_eos():
    signature = sentence_signature(10, 3)
    assert canonical_text(sequence_to_tree([], signature)) == "EOS"


def test_limits(sentence_system: ConstraintSystem):
    signature = sentence_system.signature
    with pytest.raises(UnrepresentableGraphError):
        sentence_to_tree(["w"] * 13, signature, sentence_system.binder())
    many_words = [f"w{i}" for i in range(12)]
    binder = sentence_system.binder()
    sentence_to_tree(many_words, signature, binder)
    sentence_to_tree(many_words[:6], signature, binder)
    with pytest.raises(PlaceholderPoolExhausted):
        for i in range(3):
            sentence_to_tree([f"other{i}{j}" for j in range(12)], signature, binder)


def test_sentence_round_trip(sentence_system: ConstraintSystem):
    binder = sentence_system.binder()
    signature = sentence_system.signature
    tree = sentence_to_tree(tokenize(QUESTION), signature, binder)
    decoded = decode(encode(tree, sentence_system), sentence_system, DecodeOptions(budget_seconds=60))
    assert tree_to_sentence(decoded, signature, binder) == tokenize(QUESTION)

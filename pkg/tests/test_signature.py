import pytest

from satvec.exceptions import PlaceholderPoolExhausted, SignatureError
from satvec.formats import clause_signature, sentence_signature
from satvec.graph import Graph, term
from satvec.signature import (
    MaskOptions,
    PlaceholderBinder,
    PlaceholderPool,
    declare_signature,
    signature_from_text,
)
from satvec.symbols import INTERNAL, Symbol
from tests.utils import A


@pytest.mark.parametrize(
    "signature",
    [
        declare_signature(["f/2"], ["a/0", "b/0"]),
        declare_signature(
            ["p/2"],
            ["f/2", "not/1", "a/0"],
            max_parents=3,
            masks=MaskOptions(depth=True, max_depth=4, arg_number=True, bypass_negation=True),
            negation="not/1",
            isolate_negation=True,
            max_ordered_arity=3,
            max_unordered_arity=5,
        ),
        sentence_signature(30, 7),
        clause_signature(4, 4, 4, 4),
    ],
    ids=["pair", "options", "sentence", "clause"],
)
def test_text_form_reads_back(signature):
    text = signature.to_text()
    again = signature_from_text(text)
    assert again.to_text() == text
    assert again.universe == signature.universe


def test_universe_is_sorted_and_holds_mask_expansions():
    signature = declare_signature(["f/2"], ["g/1", "a/0"], masks=MaskOptions(arg_number=True))
    assert [str(s) for s in signature.universe] == ["a", "f", "g", "g@1", "g@2"]
    assert signature.parent_symbols == (Symbol("f", 2), Symbol("g", 1), Symbol("g", 1, arg_position=1), Symbol("g", 1, arg_position=2))


def test_sequence_symbols():
    signature = sentence_signature(5, 3)
    assert len(signature.universe) == 5 + 3
    assert signature.sequence_position(Symbol("f2", 2)) == 2
    assert signature.is_root(Symbol("f1", 2))
    assert not signature.is_root(Symbol("f2", 2))
    assert signature.is_root(Symbol("EOS")) and signature.is_internal(Symbol("EOS"))


@pytest.mark.parametrize(
    "text",
    [
        "signature v1\nroot p/x\n",
        "signature v1\nroot a/0 unordered\n",
        "signature v1\nmask colour\n",
        "signature v1\nfrobnicate 3\n",
        "signature v1\nmax_parents 0\n",
        "signature v1\nsequence f 3 EOS word\n",
    ],
)
def test_malformed_text_is_rejected(text: str):
    with pytest.raises(SignatureError):
        signature_from_text(text)


def test_negation_must_be_declared_and_unary():
    with pytest.raises(SignatureError):
        declare_signature(["p/1"], ["a/0"], negation="not/1")
    with pytest.raises(SignatureError):
        declare_signature(["p/1"], ["not/2", "a/0"], negation="not/2")


def test_binder_binds_first_come_first_served():
    signature = declare_signature([], [], pools=[PlaceholderPool("w", INTERNAL, 0, 2)])
    binder = PlaceholderBinder(signature)
    graph = Graph.from_terms(term(Symbol("Texas")))
    bound = binder.bind_graph(graph, lambda symbol: "w")
    assert bound.symbols == (Symbol("w1"),)
    assert binder.unbind_graph(bound).symbols == graph.symbols
    binder.bind("border", "w")
    with pytest.raises(PlaceholderPoolExhausted):
        binder.bind("states", "w")
    assert binder.bind("Texas", "w") == Symbol("w1")
    assert binder.bind_graph(Graph.from_terms(term(A)), lambda symbol: None).symbols == (A,)

from typing import List, Optional, Sequence, Tuple

from satvec import conf
from satvec.exceptions import IllegalArgumentException, UnrepresentableGraphError
from satvec.graph import Graph, GraphBuilder
from satvec.signature import PlaceholderBinder, PlaceholderPool, SequenceSpec, Signature, declare_signature
from satvec.symbols import INTERNAL, Symbol
from satvec.utils import assert_true

POSITION_LABEL = "f"
EOS = "EOS"
WORD_POOL = "word"


def sentence_signature(vocabulary: int = conf.SENTENCE_VOCABULARY, max_length: int = conf.SENTENCE_MAX_LENGTH) -> Signature:
    """Positions f1 ... f<max_length> taking one word and the next position (or EOS).

    EOS counts as one of the `vocabulary` constants, so |S| = vocabulary + max_length.

    >>> len(sentence_signature(20000, 150).universe)
    20150
    """
    assert_true(vocabulary >= 2, IllegalArgumentException("The vocabulary must hold EOS and at least one word"))
    return declare_signature(
        roots=[],
        internals=[],
        pools=[PlaceholderPool(WORD_POOL, INTERNAL, 0, vocabulary - 1)],
        sequence=SequenceSpec(POSITION_LABEL, max_length, EOS, (WORD_POOL,)),
    )


def tokenize(text: str) -> List[str]:
    """
    >>> tokenize("What states border Texas ?")
    ['What', 'states', 'border', 'Texas', '?']
    """
    return text.split()


def sequence_to_tree(entries: Sequence[Sequence[Symbol]], signature: Signature) -> Graph:
    """f1(e1..., f2(e2..., ... fk(ek..., EOS))), a single EOS leaf for an empty sequence"""
    sequence = signature.sequence
    assert_true(sequence is not None, IllegalArgumentException("The signature declares no sequence"))
    assert sequence is not None
    if len(entries) > sequence.length:
        raise UnrepresentableGraphError(f"{len(entries)} positions exceed the maximum length {sequence.length}")
    builder = GraphBuilder()
    following = builder.add(sequence.eos_symbol)
    for position in range(len(entries), 0, -1):
        entry = entries[position - 1]
        assert_true(
            len(entry) == sequence.slots,
            IllegalArgumentException(f"Position {position} holds {len(entry)} entries, expected {sequence.slots}"),
        )
        slots = [builder.add(symbol) for symbol in entry]
        following = builder.add(sequence.position_symbol(position), *slots, following)
    return builder.build()


def tree_to_sequence(graph: Graph, signature: Signature) -> List[Tuple[Symbol, ...]]:
    sequence = signature.sequence
    assert_true(sequence is not None, IllegalArgumentException("The signature declares no sequence"))
    assert sequence is not None
    roots = graph.roots
    assert_true(len(roots) == 1, IllegalArgumentException(f"A sequence tree has one root, got {len(roots)}"))
    entries = []
    node: Optional[int] = roots[0]
    while node is not None and graph.symbols[node] != sequence.eos_symbol:
        args = graph.arguments[node]
        assert_true(
            signature.sequence_position(graph.symbols[node]) == len(entries) + 1,
            IllegalArgumentException(f"Unexpected {graph.symbols[node]} at position {len(entries) + 1}"),
        )
        entries.append(tuple(graph.symbols[child] for child in args[:-1]))
        node = args[-1]
    return entries


def sentence_to_tree(tokens: Sequence[str], signature: Signature, binder: PlaceholderBinder) -> Graph:
    """The sequence tree of a tokenized sentence, each word bound to a placeholder of the word pool.

    >>> from satvec.graph import canonical_text
    >>> signature = sentence_signature(100, 10)
    >>> canonical_text(sentence_to_tree(tokenize("What states border Texas ?"), signature, PlaceholderBinder(signature)))
    'f1(word1,f2(word2,f3(word3,f4(word4,f5(word5,EOS)))))'
    """
    return sequence_to_tree([(binder.bind(token, WORD_POOL),) for token in tokens], signature)


def tree_to_sentence(graph: Graph, signature: Signature, binder: PlaceholderBinder) -> List[str]:
    words = []
    for (symbol,) in tree_to_sequence(graph, signature):
        label = binder.concrete_label(symbol)
        assert_true(label is not None, IllegalArgumentException(f"{symbol} is bound to no word"))
        words.append(label)
    return words

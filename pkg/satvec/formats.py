from satvec.formats_impl.clauses import (
    PLACEHOLDERS,
    SINGLE,
    TptpClause,
    bind_clause,
    clause_signature,
    clause_text,
    normalize_variables,
    parse_clause,
    read_tptp,
)
from satvec.formats_impl.sentences import (
    sentence_signature,
    sentence_to_tree,
    sequence_to_tree,
    tokenize,
    tree_to_sentence,
    tree_to_sequence,
)
from satvec.formats_impl.synthetic import synthetic_clause_corpus

PLACEHOLDERS = PLACEHOLDERS
SINGLE = SINGLE
TptpClause = TptpClause
bind_clause = bind_clause
clause_signature = clause_signature
clause_text = clause_text
normalize_variables = normalize_variables
parse_clause = parse_clause
read_tptp = read_tptp
sentence_signature = sentence_signature
sentence_to_tree = sentence_to_tree
sequence_to_tree = sequence_to_tree
synthetic_clause_corpus = synthetic_clause_corpus
tokenize = tokenize
tree_to_sentence = tree_to_sentence
tree_to_sequence = tree_to_sequence

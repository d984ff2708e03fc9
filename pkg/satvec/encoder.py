from satvec.encoder_impl.decomposition import Decomposition, NodeMatch, ParentMatch, decompose, encode
from satvec.encoder_impl.matching import match_ordered, match_parent, match_sequence, match_unordered

Decomposition = Decomposition
NodeMatch = NodeMatch
ParentMatch = ParentMatch
decompose = decompose
encode = encode
match_ordered = match_ordered
match_parent = match_parent
match_sequence = match_sequence
match_unordered = match_unordered

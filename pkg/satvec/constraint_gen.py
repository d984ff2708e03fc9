from satvec.constraint_gen_impl.formulas import (
    closed_form_sizes,
    expected_family_sizes,
    ordered_count,
    parent_count,
    sequence_count,
    short_groups,
    unordered_count,
)
from satvec.constraint_gen_impl.generate import DEFAULT_WIDTHS, SENTENCE_WIDTHS, Widths, generate_constraint_set
from satvec.constraint_gen_impl.node_constraints import generate_ordered, generate_unordered
from satvec.constraint_gen_impl.parent_constraints import generate_parent
from satvec.constraint_gen_impl.partitions import order, split
from satvec.constraint_gen_impl.sequence_constraints import generate_sequence

DEFAULT_WIDTHS = DEFAULT_WIDTHS
SENTENCE_WIDTHS = SENTENCE_WIDTHS
Widths = Widths
closed_form_sizes = closed_form_sizes
expected_family_sizes = expected_family_sizes
generate_constraint_set = generate_constraint_set
generate_ordered = generate_ordered
generate_parent = generate_parent
generate_sequence = generate_sequence
generate_unordered = generate_unordered
order = order
ordered_count = ordered_count
parent_count = parent_count
sequence_count = sequence_count
short_groups = short_groups
split = split
unordered_count = unordered_count

import pytest

from satvec.constraint_gen import SENTENCE_WIDTHS, Widths
from satvec.constraint_system import ConstraintSystem, build_system
from satvec.formats import sentence_signature
from satvec.signature import MaskOptions, Signature, declare_signature


@pytest.fixture(scope="session")
def pair_signature() -> Signature:
    return declare_signature(["f/2"], ["a/0", "b/0"])


@pytest.fixture(scope="session")
def pair_system(pair_signature: Signature) -> ConstraintSystem:
    """f(a, b) and its relatives: 3 symbols, 6 constraints per set"""
    return build_system(pair_signature, Widths(parent_cells=1), t=2, seed=1)


@pytest.fixture(scope="session")
def tree_signature() -> Signature:
    """f/2 and g/1 at the root, g/1, a and b inside, argument-number masks"""
    return declare_signature(["f/2", "g/1"], ["g/1", "a/0", "b/0"], masks=MaskOptions(arg_number=True))


@pytest.fixture(scope="session")
def tree_system(tree_signature: Signature) -> ConstraintSystem:
    return build_system(tree_signature, Widths(ordered=4, unordered=4, parent=4, parent_cells=4), t=3, seed=11)


@pytest.fixture(scope="session")
def sentence_system() -> ConstraintSystem:
    return build_system(sentence_signature(40, 12), SENTENCE_WIDTHS, t=5, seed=3)

import pytest

from satvec.constraint_system import ConstraintSystem, build_system
from satvec.formats import clause_signature


@pytest.fixture(scope="session")
def clause_system() -> ConstraintSystem:
    return build_system(clause_signature(predicates=16, functions=16, constants=16, variables=4), t=2, seed=5)

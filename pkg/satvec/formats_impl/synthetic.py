from typing import List, Tuple

from satvec.random_stream import RandomStream

SHARED_PREDICATES = ("holds", "equal_sets", "member")
SHARED_FUNCTIONS = ("app", "pair")
SHARED_CONSTANTS = ("zero", "one")
VARIABLES = ("X", "Y", "Z")

OWN_NAME_RATE = 0.2
"""Probability of drawing a class-owned name instead of a shared one"""


def _pick(rng: RandomStream, items):
    return items[int(rng.generator.integers(len(items)))]


class _ClauseDrawer:
    """Draws clause texts for one class.

    Classes mostly draw from the same shared names and differ in shape: the number of literals, the nesting
    depth, the argument that holds the nested term, the order the shared functions compose in and the rate
    of equalities. A few class-owned names keep some lexical signal.
    """

    def __init__(self, label: int, rng: RandomStream):
        self.rng = rng
        self.own_predicates = [f"c{label}p{i}" for i in range(2)]
        self.own_functions = [f"c{label}f0"]
        self.own_constants = [f"c{label}k0"]
        self.literals = 1 + label % 3
        self.depth = 1 + label % 2
        self.nested_argument = label % 2
        self.composition = SHARED_FUNCTIONS if label % 4 < 2 else SHARED_FUNCTIONS[::-1]
        self.equality_rate = 0.1 + 0.15 * (label % 4)

    def _own(self) -> bool:
        return self.rng.generator.random() < OWN_NAME_RATE

    def leaf(self) -> str:
        if self.rng.generator.random() < 0.4:
            return _pick(self.rng, VARIABLES)
        return _pick(self.rng, self.own_constants if self._own() else SHARED_CONSTANTS)

    def nested(self, level: int) -> str:
        """A binary term `level` applications deep, its nested term always at the class's argument"""
        if level <= 0:
            return self.leaf()
        function = _pick(self.rng, self.own_functions) if self._own() else self.composition[level % 2]
        args = [self.leaf(), self.leaf()]
        args[self.nested_argument] = self.nested(level - 1)
        return f"{function}({', '.join(args)})"

    def literal(self) -> str:
        if self.rng.generator.random() < self.equality_rate:
            atom = f"{self.nested(self.depth)} = {self.leaf()}"
            return f"~({atom})" if self.rng.generator.random() < 0.4 else atom
        predicate = _pick(self.rng, self.own_predicates if self._own() else SHARED_PREDICATES)
        args = [self.leaf(), self.leaf()]
        args[self.nested_argument] = self.nested(self.depth)
        atom = f"{predicate}({', '.join(args)})"
        return f"~{atom}" if self.rng.generator.random() < 0.4 else atom

    def clause(self) -> str:
        count = max(1, min(5, self.literals + int(self.rng.generator.integers(-1, 2))))
        return " | ".join(self.literal() for _ in range(count))


def synthetic_clause_corpus(classes: int = 5, size: int = 500, seed: int = 0) -> List[Tuple[str, int]]:
    """`size` labelled clause texts spread evenly over `classes` classes, interleaved by class.

    >>> corpus = synthetic_clause_corpus(classes=2, size=4, seed=3)
    >>> [label for _, label in corpus]
    [0, 1, 0, 1]
    >>> corpus == synthetic_clause_corpus(classes=2, size=4, seed=3)
    True
    """
    stream = RandomStream(seed)
    drawers = [_ClauseDrawer(label, stream.child(label)) for label in range(classes)]
    return [(drawers[i % classes].clause(), i % classes) for i in range(size)]

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Union

from satvec.constraint_system import ConstraintSystem
from satvec.exceptions import IllegalArgumentException
from satvec.formats_impl.clauses import (
    PLACEHOLDERS,
    VARIABLE_POOL,
    bind_clause,
    clause_text,
    normalize_variables,
    parse_clause,
    read_tptp,
)
from satvec.formats_impl.sentences import sentence_to_tree, tokenize, tree_to_sentence
from satvec.graph import Graph
from satvec.signature import PlaceholderBinder
from satvec.utils import assert_true

SENTENCES = "sentences"
CLAUSES = "clauses"
DOMAINS = (SENTENCES, CLAUSES)


def domain_of(system: ConstraintSystem) -> str:
    """Sentence systems declare a sequence, every other system reads clauses"""
    return SENTENCES if system.signature.sequence is not None else CLAUSES


def read_corpus(path: Union[str, Path]) -> List[str]:
    """One item per non-blank line; TPTP files (`.p`, `.ax` or `cnf(` lines) yield their clauses."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if path.suffix in (".p", ".ax") or any(line.lstrip().startswith("cnf(") for line in lines):
        return [clause.text for clause in read_tptp(lines)]
    return [line.strip() for line in lines if line.strip()]


def read_labels(path: Union[str, Path]) -> List[str]:
    return [line.strip() for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]


@dataclass
class Codec:
    """Turns corpus items into graphs over the system's signature and back.

    Binding placeholders mutates `binder`: prepare every item before decoding any.
    """

    system: ConstraintSystem
    binder: PlaceholderBinder
    variable_mode: str = PLACEHOLDERS

    @property
    def domain(self) -> str:
        return domain_of(self.system)

    def to_graph(self, item: str) -> Graph:
        signature = self.system.signature
        if self.domain == SENTENCES:
            return sentence_to_tree(tokenize(item), signature, self.binder)
        variables = signature.pool(VARIABLE_POOL).size
        graph = normalize_variables(parse_clause(item), variables, self.variable_mode)
        return bind_clause(graph, self.binder)

    def to_text(self, graph: Graph) -> str:
        if self.domain == SENTENCES:
            return " ".join(tree_to_sentence(graph, self.system.signature, self.binder))
        return clause_text(self.binder.unbind_graph(graph))


def codec_for(system: ConstraintSystem, variable_mode: str = PLACEHOLDERS, binder: Optional[PlaceholderBinder] = None) -> Codec:
    return Codec(system, binder if binder is not None else system.binder(), variable_mode)


def check_labels(items: Sequence[str], labels: Sequence[str]) -> None:
    assert_true(
        len(items) == len(labels),
        IllegalArgumentException(f"The corpus holds {len(items)} items but {len(labels)} labels were given"),
    )

import logging
from dataclasses import dataclass
from typing import Hashable, List, Optional

from satvec.decoder_impl.associations import Association, Associations, describe
from satvec.signature import Signature
from satvec.symbols import Symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TupleVar:
    """One candidate edge p -> s, or a root s when p is None.

    `gamma_la` identifies the node of s by its own lead sets (None for leaves), `gamma_c` by its child
    sets (None for roots or when parent constraints are disabled); `gamma_lp` and `gamma_a` place it
    in an argument slot of the node of p, `gamma_p` in a parent slot of its own parent constraints.
    `copy` tells apart the instances of a root leaf symbol.
    """

    s: Symbol
    p: Optional[Symbol] = None
    gamma_p: Optional[Association] = None
    gamma_c: Optional[Association] = None
    gamma_lp: Optional[Association] = None
    gamma_a: Optional[Association] = None
    gamma_la: Optional[Association] = None
    copy: Optional[int] = None

    @property
    def is_root(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        if self.is_root:
            suffix = "" if self.copy is None else f"#{self.copy}"
            return f"<{self.s}{suffix} root la={describe(self.gamma_la)}>"
        return (
            f"<{self.s} under {self.p} lp={describe(self.gamma_lp)} a={describe(self.gamma_a)}"
            f" la={describe(self.gamma_la)} c={describe(self.gamma_c)} p={describe(self.gamma_p)}>"
        )


def node_key(var: TupleVar, parents_enabled: bool) -> Hashable:
    """Tuples sharing this key stand for the same node.

    With parent constraints a node is known by its symbol, its lead sets and its child sets, so a node
    with several parents gathers several tuples; without them every tuple is a node of its own.
    """
    if parents_enabled:
        return (var.s, var.gamma_la, var.gamma_c, var.copy)
    return var


def enumerate_tuples(associations: Associations, signature: Signature, parents_enabled: bool) -> List[TupleVar]:
    """Every valid tuple over the extracted multisets, in a deterministic order."""
    multisets = associations.multisets
    symbols = multisets.symbols
    tuples: List[TupleVar] = []
    for s in symbols:
        if not signature.is_root(s):
            continue
        if s.is_leaf:
            tuples.extend(TupleVar(s, copy=k) for k in range(multisets.symbol_counts[s]))
        else:
            tuples.extend(TupleVar(s, gamma_la=lead) for lead in associations.leads(s, rooted=True))
    internal = [s for s in symbols if signature.is_internal(s)]
    lead_options = {s: [None] if s.is_leaf else associations.leads(s, rooted=False) for s in internal}
    child_options = {s: associations.children(s) if parents_enabled else [None] for s in internal}
    for p in symbols:
        if p.is_leaf:
            continue
        for rooted in (True, False):
            for gamma_lp in associations.leads(p, rooted):
                for s in internal:
                    for gamma_a in associations.arguments(s, gamma_lp):
                        for gamma_c in child_options[s]:
                            parent_options = [None] if gamma_c is None else associations.parents(p, gamma_c)
                            for gamma_p in parent_options:
                                for gamma_la in lead_options[s]:
                                    # a node is never its own argument
                                    if s == p and gamma_la == gamma_lp:
                                        continue
                                    tuples.append(TupleVar(s, p, gamma_p, gamma_c, gamma_lp, gamma_a, gamma_la))
    logger.debug("Enumerated %s tuples over %s symbols", len(tuples), len(symbols))
    return tuples

import copy
import json
import logging
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Union

from satvec import conf
from satvec.constraint_system import ConstraintSystem
from satvec.decoder_impl.associations import Multisets, collect_associations, extract_multisets
from satvec.decoder_impl.cycles import (
    CYCLE_MODES,
    EAGER,
    LAZY,
    OFF,
    find_cycle_nogoods,
    implication_graph,
    lead_cycle_nogoods,
    lead_graph,
)
from satvec.decoder_impl.formula import NOGOODS, Formula, build_formula
from satvec.decoder_impl.reconstruction import induced_tuples, model_to_graph
from satvec.decoder_impl.solvers import SAT, UNKNOWN, SolverBackend, get_backend
from satvec.decoder_impl.tuples import TupleVar, enumerate_tuples
from satvec.encoder_impl.decomposition import decompose, encode
from satvec.exceptions import (
    CycleBudgetExceeded,
    DecodingTimeout,
    IllegalArgumentException,
    InvalidReconstruction,
    MatchError,
    UnrepresentableGraphError,
    UnsatisfiableError,
)
from satvec.graph import Graph, same_shape
from satvec.masks import strip_masks
from satvec.utils import assert_true
from satvec.vectors import CountVector

logger = logging.getLogger(__name__)

EAGER = EAGER
LAZY = LAZY
OFF = OFF


@dataclass(frozen=True)
class DecodeOptions:
    verify: bool = True
    """Re-encode every candidate and reject those whose vector differs from the input"""
    budget_seconds: Optional[float] = None
    """Wall-clock budget of one decode, None for no limit"""
    cycle_mode: str = EAGER
    """eager: the cycle nogoods of the lead graph before solving, per model past the cycle cap;
    lazy: nogoods for the cycles of each model; off: no nogoods"""
    cycle_cap: Optional[int] = None
    keep_masks: bool = False
    backend: Optional[str] = None
    solver_name: Optional[str] = None
    exactly_one: Optional[str] = None
    cardinality: Optional[str] = None

    def __post_init__(self):
        assert_true(
            self.cycle_mode in CYCLE_MODES,
            IllegalArgumentException(f"Unknown cycle mode '{self.cycle_mode}', expected one of {CYCLE_MODES}"),
        )
        assert_true(
            self.budget_seconds is None or self.budget_seconds > 0,
            IllegalArgumentException("The decoding budget must be positive"),
        )

    @property
    def resolved_cycle_cap(self) -> int:
        if self.cycle_cap is not None:
            return self.cycle_cap
        return int(os.getenv("SATVEC_CYCLE_CAP") or conf.CYCLE_CAP)

    @property
    def resolved_exactly_one(self) -> str:
        return self.exactly_one or os.getenv("SATVEC_EXACTLY_ONE") or conf.EXACTLY_ONE_ENCODING

    @property
    def resolved_cardinality(self) -> str:
        return self.cardinality or os.getenv("SATVEC_CARDINALITY") or conf.CARDINALITY_ENCODING


DEFAULT_DECODE_OPTIONS = DecodeOptions()


@dataclass
class DecodeStats:
    tuples: int = 0
    """Number of tuple variables"""
    variables: int = 0
    """Number of variables, auxiliary ones included"""
    clauses: Dict[str, int] = field(default_factory=dict)
    """Number of clauses per group"""
    cycles: int = 0
    solve_calls: int = 0
    blocked_models: int = 0
    """Models rejected by verification, or enumerated and excluded"""
    lazy_fallback: bool = False
    """Whether eager cycle enumeration hit the cap and nogoods were added per model instead"""
    seconds: Dict[str, float] = field(default_factory=dict)

    def add_time(self, phase: str, seconds: float) -> None:
        self.seconds[phase] = self.seconds.get(phase, 0.0) + seconds


class _Deadline:
    def __init__(self, budget: Optional[float]):
        self.end = None if budget is None else time.perf_counter() + budget

    def remaining(self) -> Optional[float]:
        if self.end is None:
            return None
        return self.end - time.perf_counter()

    def check(self, phase: str) -> None:
        remaining = self.remaining()
        if remaining is not None and remaining <= 0:
            raise DecodingTimeout(f"Decoding budget exhausted during {phase}")


class Decoder:
    """Reconstructs graphs from count vectors of one constraint system.

    >>> from satvec.constraint_system import build_system
    >>> from satvec.constraint_gen import Widths
    >>> from satvec.graph import canonical_text, term
    >>> from satvec.signature import declare_signature
    >>> from satvec.symbols import Symbol
    >>> system = build_system(declare_signature(["f/2"], ["a/0", "b/0"]), Widths(parent_cells=1), t=2, seed=1)
    >>> graph = Graph.from_terms(term(Symbol("f", 2), term(Symbol("a")), term(Symbol("b"))))
    >>> canonical_text(Decoder(system).decode(encode(graph, system)))
    'f(a,b)'
    """

    def __init__(
        self,
        system: ConstraintSystem,
        options: DecodeOptions = DEFAULT_DECODE_OPTIONS,
        backend: Optional[SolverBackend] = None,
    ):
        self.system = system
        self.options = options
        self.backend = backend or get_backend(options.backend, options.solver_name)
        self._stats = DecodeStats()

    @property
    def stats(self) -> DecodeStats:
        """Statistics of the last decode"""
        return copy.deepcopy(self._stats)

    @property
    def parents_enabled(self) -> bool:
        return self.system.widths.parents_enabled

    def _timed(self, phase: str, start: float) -> None:
        self._stats.add_time(phase, time.perf_counter() - start)

    def formula(self, vector: CountVector, deadline: Optional[_Deadline] = None) -> Formula:
        """The formula of a vector, with the cycle nogoods when the cycle mode is eager"""
        clock = deadline or _Deadline(None)
        self._stats = DecodeStats()
        start = time.perf_counter()
        multisets: Multisets = extract_multisets(vector, self.system)
        associations = collect_associations(multisets)
        tuples = enumerate_tuples(associations, self.system.signature, self.parents_enabled)
        self._stats.tuples = len(tuples)
        self._timed("tuples", start)
        clock.check("tuple enumeration")
        start = time.perf_counter()
        formula = build_formula(
            tuples,
            multisets,
            associations,
            self.parents_enabled,
            self.options.resolved_exactly_one,
            self.options.resolved_cardinality,
        )
        self._record_sizes(formula)
        self._timed("formula", start)
        clock.check("formula construction")
        if self.options.cycle_mode == EAGER:
            start = time.perf_counter()
            try:
                definitions, nogoods = lead_cycle_nogoods(
                    lead_graph(formula.variables),
                    formula.pool,
                    self.options.resolved_cycle_cap,
                    lambda: clock.check("cycle enumeration"),
                )
            except CycleBudgetExceeded as e:
                logger.warning("%s, cycle nogoods are added per model instead", e)
                self._stats.lazy_fallback = True
            else:
                formula.add(NOGOODS, definitions + nogoods)
                self._stats.cycles = len(nogoods)
                self._record_sizes(formula)
                logger.info("Added %s cycle nogoods", len(nogoods))
            finally:
                self._timed("cycles", start)
        return formula

    def _record_sizes(self, formula: Formula) -> None:
        self._stats.variables = formula.nvars
        self._stats.clauses = formula.clause_counts

    @property
    def _lazy_cycles(self) -> bool:
        return self.options.cycle_mode == LAZY or self._stats.lazy_fallback

    def solve(self, formula: Formula, assumptions: Sequence[int] = ()) -> Optional[List[int]]:
        """A model of the formula under the assumptions, None when there is none"""
        with self.backend.session(formula.all_clauses) as session:
            result = session.solve(assumptions)
        self._stats.solve_calls += 1
        if result.status == UNKNOWN:
            raise DecodingTimeout("The solver gave up")
        return result.model if result.is_sat else None

    def model_to_graph(self, formula: Formula, model: Sequence[int]) -> Graph:
        return model_to_graph(formula.true_tuples(model), self.system.signature, self.parents_enabled)

    def accepts(self, vector: CountVector, true_tuples: Iterable[TupleVar]) -> bool:
        """Whether the formula of `vector` is satisfied when exactly `true_tuples` are true"""
        formula = self.formula(vector)
        true_tuples = set(true_tuples)
        if not true_tuples <= set(formula.variables):
            return False
        assumptions = [var if t in true_tuples else -var for t, var in formula.variables.items()]
        return self.solve(formula, assumptions) is not None

    def _verified(self, graph: Graph, vector: CountVector) -> bool:
        try:
            return encode(strip_masks(graph), self.system) == vector
        except (UnrepresentableGraphError, MatchError) as e:
            logger.debug("Candidate cannot be re-encoded: %s", e)
            return False

    def _search(self, vector: CountVector) -> Iterator[Graph]:
        deadline = _Deadline(self.options.budget_seconds)
        formula = self.formula(vector, deadline)
        tuple_vars = set(formula.variables.values())
        with self.backend.session(formula.all_clauses) as session:
            while True:
                start = time.perf_counter()
                result = session.solve(timeout=deadline.remaining())
                self._stats.solve_calls += 1
                self._timed("solve", start)
                logger.debug("Solve call %s: %s", self._stats.solve_calls, result.status)
                if result.status == UNKNOWN:
                    raise DecodingTimeout(f"No verified graph within {self.options.budget_seconds} seconds")
                if result.status != SAT:
                    return
                assert result.model is not None
                true_vars = [lit for lit in result.model if lit > 0 and lit in tuple_vars]
                blocking = [-var for var in true_vars]
                if self._lazy_cycles:
                    nogoods = find_cycle_nogoods(
                        implication_graph(formula.sigma, set(true_vars)),
                        self.options.resolved_cycle_cap,
                        lambda: deadline.check("cycle enumeration"),
                    )
                    if nogoods:
                        for nogood in nogoods:
                            session.add_clause(nogood)
                        self._stats.cycles += len(nogoods)
                        continue
                try:
                    graph = self.model_to_graph(formula, result.model)
                except InvalidReconstruction as e:
                    logger.info("Rejected a model that does not assemble to a valid graph: %s", e)
                    self._stats.blocked_models += 1
                    session.add_clause(blocking)
                    continue
                if self.options.verify and not self._verified(graph, vector):
                    logger.info("Rejected a model whose graph does not re-encode to the input vector")
                    self._stats.blocked_models += 1
                    session.add_clause(blocking)
                    continue
                yield graph if self.options.keep_masks else strip_masks(graph)
                self._stats.blocked_models += 1
                session.add_clause(blocking)

    def decode(self, vector: CountVector) -> Graph:
        """The first (verified) graph of the vector.

        Raises UnsatisfiableError when no graph has this vector, DecodingTimeout when the budget runs out.
        """
        for graph in self._search(vector):
            return graph
        raise UnsatisfiableError("No graph of this system has this vector")

    def decode_all(self, vector: CountVector, limit: Optional[int] = None) -> List[Graph]:
        """Every distinct (verified) graph of the vector, up to `limit`"""
        graphs: List[Graph] = []
        for graph in self._search(vector):
            if not any(same_shape(graph, other) for other in graphs):
                graphs.append(graph)
            if limit is not None and len(graphs) >= limit:
                break
        return graphs


def decode(vector: CountVector, system: ConstraintSystem, options: DecodeOptions = DEFAULT_DECODE_OPTIONS) -> Graph:
    return Decoder(system, options).decode(vector)


def decode_all(
    vector: CountVector,
    system: ConstraintSystem,
    options: DecodeOptions = DEFAULT_DECODE_OPTIONS,
    limit: Optional[int] = None,
) -> List[Graph]:
    return Decoder(system, options).decode_all(vector, limit)


def induced_assignment(graph: Graph, system: ConstraintSystem) -> List[TupleVar]:
    """The tuple variables made true by the graph's own decomposition, in a deterministic order"""
    return sorted(induced_tuples(decompose(graph, system), system), key=str)


def write_dimacs(formula: Formula, path: Union[str, Path]) -> None:
    """Write the formula in DIMACS next to a JSON map from tuple variables to their tuples"""
    path = Path(path)
    formula.to_cnf().to_file(str(path), comments=[f"c {len(formula.tuples)} tuple variables"])
    variables = {str(var): str(t) for t, var in formula.variables.items()}
    path.with_suffix(path.suffix + ".vars.json").write_text(json.dumps(variables, indent=2, sort_keys=True))
    logger.info("Wrote %s clauses to %s", len(formula.all_clauses), path)

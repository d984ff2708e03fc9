import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from satvec.constraint_system import ConstraintSystem
from satvec.decoder import DecodeOptions, Decoder
from satvec.encoder import encode
from satvec.exceptions import (
    ClauseSyntaxError,
    DecodingError,
    IllegalArgumentException,
    MatchError,
    UnrepresentableGraphError,
)
from satvec.experiments.corpus import Codec, codec_for
from satvec.experiments.report import CORRECT, INCORRECT, TIMEOUT, UNREPRESENTABLE, ExperimentReport, ItemOutcome
from satvec.graph import Graph, canonical_text
from satvec.utils import assert_true

logger = logging.getLogger(__name__)

PREPARATION_ERRORS = (UnrepresentableGraphError, MatchError, ClauseSyntaxError)


@dataclass(frozen=True)
class RoundtripOptions:
    budget_seconds: Optional[float] = None
    """Decoding budget per item, None for no limit"""
    verify: bool = True
    workers: int = 1
    """Number of worker processes, 1 decodes inline"""
    decode_options: DecodeOptions = DecodeOptions()
    progress: bool = True

    def __post_init__(self):
        assert_true(self.workers >= 1, IllegalArgumentException("At least one worker is needed"))

    @property
    def resolved_decode_options(self) -> DecodeOptions:
        return replace(self.decode_options, verify=self.verify, budget_seconds=self.budget_seconds)


DEFAULT_ROUNDTRIP_OPTIONS = RoundtripOptions()


def roundtrip_graph(index: int, graph: Graph, system: ConstraintSystem, options: DecodeOptions) -> ItemOutcome:
    """Encode then decode one graph.

    The outcome is correct when the decoded graph has the same canonical text and incorrect when it differs.
    A vector the decoder gives up on, for lack of time or of a model, is a timeout.
    """
    seconds = {}
    start = time.perf_counter()
    try:
        vector = encode(graph, system)
    except (UnrepresentableGraphError, MatchError) as e:
        return ItemOutcome(index, UNREPRESENTABLE, message=str(e))
    seconds["encode"] = time.perf_counter() - start
    decoder = Decoder(system, options)
    start = time.perf_counter()
    try:
        decoded = decoder.decode(vector)
        outcome = CORRECT if canonical_text(decoded) == canonical_text(graph) else INCORRECT
        message = None
    except DecodingError as e:
        logger.debug("Item %s was not decoded: %s", index, e)
        outcome, message = TIMEOUT, str(e)
    seconds["decode"] = time.perf_counter() - start
    for phase, phase_seconds in decoder.stats.seconds.items():
        seconds[f"decode.{phase}"] = phase_seconds
    return ItemOutcome(index, outcome, seconds, message)


def prepare(items: Sequence[str], codec: Codec) -> Tuple[List[Tuple[int, Graph]], List[ItemOutcome]]:
    """The graphs of the representable items, and the outcomes of the others"""
    graphs = []
    failures = []
    for index, item in enumerate(items):
        start = time.perf_counter()
        try:
            graphs.append((index, codec.to_graph(item)))
        except PREPARATION_ERRORS as e:
            logger.debug("Item %s is unrepresentable: %s", index, e)
            failures.append(ItemOutcome(index, UNREPRESENTABLE, {"prepare": time.perf_counter() - start}, str(e)))
    return graphs, failures


_worker_state: dict = {}


def _init_worker(system: ConstraintSystem, options: DecodeOptions) -> None:
    _worker_state["system"] = system
    _worker_state["options"] = options


def _run_in_worker(index: int, graph: Graph) -> ItemOutcome:
    return roundtrip_graph(index, graph, _worker_state["system"], _worker_state["options"])


def roundtrip(
    items: Sequence[str],
    system: ConstraintSystem,
    options: RoundtripOptions = DEFAULT_ROUNDTRIP_OPTIONS,
    codec: Optional[Codec] = None,
) -> ExperimentReport:
    """Convert every item into a vector and back, and count how many come back unchanged.

    Unrepresentable items count as failures. With several workers the outcomes are the same, only their
    completion order differs.
    """
    codec = codec or codec_for(system)
    graphs, outcomes = prepare(items, codec)
    decode_options = options.resolved_decode_options
    logger.info("Round trip of %s items (%s unrepresentable) with %s workers", len(items), len(outcomes), options.workers)
    progress = tqdm(total=len(graphs), disable=not options.progress, desc="roundtrip")
    if options.workers == 1:
        for index, graph in graphs:
            outcomes.append(roundtrip_graph(index, graph, system, decode_options))
            progress.update()
    else:
        with ProcessPoolExecutor(options.workers, initializer=_init_worker, initargs=(system, decode_options)) as pool:
            futures = [pool.submit(_run_in_worker, index, graph) for index, graph in graphs]
            for future in as_completed(futures):
                outcomes.append(future.result())
                progress.update()
    progress.close()
    outcomes.sort(key=lambda outcome: outcome.index)
    return ExperimentReport(outcomes, system.t, options.budget_seconds, options.verify, system.digest)

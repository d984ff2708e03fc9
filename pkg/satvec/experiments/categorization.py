import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from satvec.constraint_system import ConstraintSystem
from satvec.encoder import encode
from satvec.exceptions import IllegalArgumentException, MatchError, UnrepresentableGraphError
from satvec.experiments.corpus import check_labels, codec_for
from satvec.experiments.roundtrip import PREPARATION_ERRORS
from satvec.formats_impl.clauses import SINGLE
from satvec.graph import canonical_text
from satvec.printing import print_table
from satvec.random_stream import RandomStream
from satvec.similarity import RowMatrix, bag_of_words_matrix, majority, structural_matrix, to_row_matrix
from satvec.utils import assert_true, round_robin

logger = logging.getLogger(__name__)

DEFAULT_LAMBDAS = tuple(round(0.1 * i, 1) for i in range(11))


@dataclass(frozen=True)
class CategorizationOptions:
    lambdas: Tuple[float, ...] = DEFAULT_LAMBDAS
    folds: int = 5
    seed: int = 0
    """Seed of the fold assignment"""
    ts: Optional[Tuple[int, ...]] = None
    """Numbers of parallel sets to evaluate, all prefixes of the system when None"""
    k: int = 1
    variable_mode: str = SINGLE
    progress: bool = True

    def __post_init__(self):
        assert_true(self.folds >= 1, IllegalArgumentException("At least one fold is needed"))
        assert_true(self.k >= 1, IllegalArgumentException(f"k must be at least 1, got {self.k}"))
        assert_true(
            all(0.0 <= lam <= 1.0 for lam in self.lambdas), IllegalArgumentException("λ values must lie in [0, 1]")
        )


DEFAULT_CATEGORIZATION_OPTIONS = CategorizationOptions()


@dataclass
class CategorizationReport:
    accuracy: Dict[int, Dict[float, float]]
    """t -> λ -> mean accuracy over the folds, in percent"""
    items: int
    """Number of distinct items evaluated"""
    skipped: int
    """Items dropped as duplicates or as unrepresentable"""
    folds: int
    seed: int
    k: int
    digest: str = ""
    lambdas: List[float] = field(default_factory=list)

    def best_lambda(self, t: int) -> float:
        """The λ of highest accuracy, the smallest one on ties"""
        curve = self.accuracy[t]
        return max(curve, key=lambda lam: (curve[lam], -lam))

    def to_json(self) -> str:
        summary = {
            "items": self.items,
            "skipped": self.skipped,
            "folds": self.folds,
            "seed": self.seed,
            "k": self.k,
            "digest": self.digest,
            "accuracy": {str(t): {str(lam): acc for lam, acc in curve.items()} for t, curve in self.accuracy.items()},
        }
        return json.dumps(summary, indent=2)

    def display(self) -> None:
        print(f"{self.folds}-fold accuracy of {self.k}-NN over {self.items} items ({self.skipped} skipped)")
        ts = sorted(self.accuracy)
        rows = [[lam] + [f"{self.accuracy[t][lam]:.1f}%" for t in ts] for lam in self.lambdas]
        print_table(rows, headers=["λ"] + [f"t={t}" for t in ts])


def _folds(n: int, folds: int, seed: int) -> List[Tuple[List[int], List[int]]]:
    """(training, test) index lists; a single fold trains and tests on everything"""
    if folds == 1:
        everything = list(range(n))
        return [(everything, everything)]
    order = RandomStream(seed).shuffled(list(range(n)))
    cells = [sorted(cell) for cell in round_robin(order, folds)]
    return [(sorted(set(range(n)) - set(test)), test) for test in cells]


def _classify(similarity: np.ndarray, labels: Sequence, training: List[int], test: List[int], k: int) -> float:
    train = np.array(training)
    correct = 0
    for i in test:
        scores = similarity[i, train]
        nearest = np.lexsort((np.arange(len(train)), -scores))[:k]
        if majority([labels[training[j]] for j in nearest]) == labels[i]:
            correct += 1
    return 100.0 * correct / len(test)


def encode_corpus(
    items: Sequence[str], labels: Sequence, system: ConstraintSystem, variable_mode: str = SINGLE
) -> Tuple[List[RowMatrix], List, int]:
    """Row matrices and labels of the distinct representable items, and the number of items dropped"""
    codec = codec_for(system, variable_mode)
    seen = set()
    matrices = []
    kept_labels = []
    for item, label in zip(items, labels):
        try:
            graph = codec.to_graph(item)
            key = canonical_text(graph)
            if key in seen:
                continue
            vector = encode(graph, system)
        except PREPARATION_ERRORS + (MatchError, UnrepresentableGraphError) as e:
            logger.debug("Skipping unrepresentable item: %s", e)
            continue
        seen.add(key)
        matrices.append(to_row_matrix(vector, system))
        kept_labels.append(label)
    return matrices, kept_labels, len(items) - len(matrices)


def categorize(
    items: Sequence[str],
    labels: Sequence,
    system: ConstraintSystem,
    options: CategorizationOptions = DEFAULT_CATEGORIZATION_OPTIONS,
) -> CategorizationReport:
    """Cross-validated k-NN accuracy of the blended similarity, per λ and per number of parallel sets.

    Items are deduplicated after normalization; the folds only depend on the seed.
    """
    check_labels(items, labels)
    matrices, kept_labels, skipped = encode_corpus(items, labels, system, options.variable_mode)
    assert_true(len(matrices) >= 2, IllegalArgumentException("At least two distinct representable items are needed"))
    ts = options.ts or tuple(range(1, system.t + 1))
    folds = _folds(len(matrices), min(options.folds, len(matrices)), options.seed)
    logger.info("Categorizing %s items (%s skipped) over %s folds", len(matrices), skipped, len(folds))
    accuracy: Dict[int, Dict[float, float]] = {}
    for t in tqdm(ts, disable=not options.progress, desc="categorize"):
        truncated = [m.truncate(t) for m in matrices]
        structural = structural_matrix(truncated)
        bag_of_words = bag_of_words_matrix(truncated)
        accuracy[t] = {}
        for lam in options.lambdas:
            similarity = lam * structural + (1 - lam) * bag_of_words
            scores = [_classify(similarity, kept_labels, training, test, options.k) for training, test in folds]
            accuracy[t][lam] = round(float(np.mean(scores)), 1)
    return CategorizationReport(
        accuracy, len(matrices), skipped, len(folds), options.seed, options.k, system.digest, list(options.lambdas)
    )

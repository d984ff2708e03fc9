from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Dict, Hashable, List, Sequence, Tuple

import numpy as np

from satvec.exceptions import IllegalArgumentException, SystemMismatchError
from satvec.utils import assert_true
from satvec.vectors import CountVector

if TYPE_CHECKING:
    from satvec.constraint_system import ConstraintSystem

COSINE = "cosine"
DOT = "dot"


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity, with cos(0, 0) = 1 and cos(0, x) = 0 so that empty rows do not dominate a minimum.

    >>> cosine(np.array([1, 0]), np.array([2, 0]))
    1.0
    >>> cosine(np.array([0, 0]), np.array([0, 0]))
    1.0
    >>> cosine(np.array([0, 0]), np.array([0, 3]))
    0.0
    """
    norm_u = float(np.linalg.norm(u))
    norm_v = float(np.linalg.norm(v))
    if norm_u == 0 and norm_v == 0:
        return 1.0
    if norm_u == 0 or norm_v == 0:
        return 0.0
    return float(np.dot(u, v)) / (norm_u * norm_v)


def dot(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.dot(u, v))


_PHIS: Dict[str, Callable[[np.ndarray, np.ndarray], float]] = {COSINE: cosine, DOT: dot}


@dataclass(frozen=True, eq=False)
class RowMatrix:
    """The irregular matrix of a count vector: the symbol row, then one row per parallel set."""

    rows: Tuple[np.ndarray, ...]
    digest: str

    @property
    def t(self) -> int:
        return len(self.rows) - 1

    @property
    def symbols(self) -> np.ndarray:
        return self.rows[0]

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def flatten(self) -> np.ndarray:
        return np.concatenate(self.rows)

    def truncate(self, t: int) -> "RowMatrix":
        """The matrix of the first t parallel sets"""
        assert_true(1 <= t <= self.t, IllegalArgumentException(f"Cannot truncate {self.t} rows to {t}"))
        return RowMatrix(self.rows[: t + 1], self.digest)


def to_row_matrix(vector: CountVector, system: "ConstraintSystem") -> RowMatrix:
    vector.check_system(system)
    return RowMatrix(tuple(vector.counts[s].astype(np.float64) for s in system.row_slices), vector.digest)


def _check_shapes(m: RowMatrix, n: RowMatrix) -> None:
    assert_true(
        m.digest == n.digest and m.shape == n.shape,
        SystemMismatchError(f"Matrices of shapes {m.shape} and {n.shape} come from different systems"),
    )


def structural_sim(m: RowMatrix, n: RowMatrix, phi: str = COSINE) -> float:
    """The minimum over rows of the row-wise similarity"""
    _check_shapes(m, n)
    assert_true(phi in _PHIS, IllegalArgumentException(f"Unknown similarity '{phi}', expected one of {list(_PHIS)}"))
    function = _PHIS[phi]
    return min(function(a, b) for a, b in zip(m.rows, n.rows))


def bag_of_words_sim(m: RowMatrix, n: RowMatrix) -> float:
    """Cosine over the symbol rows only"""
    _check_shapes(m, n)
    return cosine(m.symbols, n.symbols)


def blended_sim(m: RowMatrix, n: RowMatrix, lam: float) -> float:
    """λ·structural + (1 - λ)·bag of words: λ = 0 is purely symbol, λ = 1 purely structural"""
    assert_true(0.0 <= lam <= 1.0, IllegalArgumentException(f"λ must lie in [0, 1], got {lam}"))
    return lam * structural_sim(m, n, COSINE) + (1 - lam) * bag_of_words_sim(m, n)


def nearest(query: RowMatrix, training: Sequence[RowMatrix], lam: float, k: int = 1) -> List[Tuple[int, float]]:
    """The k most similar training items as (index, similarity), ties in training order"""
    scores = [(i, blended_sim(query, item, lam)) for i, item in enumerate(training)]
    return sorted(scores, key=lambda score: (-score[1], score[0]))[:k]


def knn_classify(query: RowMatrix, training: Sequence[Tuple[RowMatrix, Hashable]], lam: float, k: int = 1) -> Hashable:
    """Majority label of the k nearest training items; ties go to the label of the nearest among them.

    With k = 1 this is the label of the most similar item, the first one in training order on ties.
    """
    assert_true(len(training) > 0, IllegalArgumentException("The training set is empty"))
    assert_true(k >= 1, IllegalArgumentException(f"k must be at least 1, got {k}"))
    neighbours = nearest(query, [item for item, _ in training], lam, k)
    return majority([training[i][1] for i, _ in neighbours])


def majority(labels: Sequence[Hashable]) -> Hashable:
    """The most frequent label, the earliest one on ties (labels come nearest first).

    >>> majority(["b", "a", "a", "b"])
    'b'
    """
    votes = Counter(labels)
    best = max(votes.values())
    return next(label for label in labels if votes[label] == best)


def pairwise_cosine(rows: np.ndarray) -> np.ndarray:
    """Cosine between every pair of rows of a 2-D array, with the zero-row conventions of `cosine`.

    >>> pairwise_cosine(np.array([[1.0, 0.0], [0.0, 0.0], [2.0, 0.0]]))
    array([[1., 0., 1.],
           [0., 1., 0.],
           [1., 0., 1.]])
    """
    norms = np.linalg.norm(rows, axis=1)
    zero = norms == 0
    unit = rows / np.where(zero, 1.0, norms)[:, None]
    result = unit @ unit.T
    result[np.ix_(zero, zero)] = 1.0
    return result


def _stacked(matrices: Sequence[RowMatrix], row: int) -> np.ndarray:
    for m in matrices[1:]:
        _check_shapes(matrices[0], m)
    return np.vstack([m.rows[row] for m in matrices])


def bag_of_words_matrix(matrices: Sequence[RowMatrix]) -> np.ndarray:
    """`bag_of_words_sim` between every pair of matrices"""
    return pairwise_cosine(_stacked(matrices, 0))


def structural_matrix(matrices: Sequence[RowMatrix]) -> np.ndarray:
    """`structural_sim` under cosine between every pair of matrices"""
    assert_true(len(matrices) > 0, IllegalArgumentException("No matrices"))
    return np.minimum.reduce([pairwise_cosine(_stacked(matrices, row)) for row in range(matrices[0].t + 1)])

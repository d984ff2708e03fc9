from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, List, Optional, Tuple

import numpy as np

from satvec.exceptions import IllegalArgumentException, SystemMismatchError
from satvec.utils import assert_true

if TYPE_CHECKING:
    from satvec.constraint_system import ConstraintSystem

HEADER = "satvec-vector v1"
COUNT_DTYPE = np.int64


@dataclass(frozen=True, eq=False)
class CountVector:
    """Symbol and constraint occurrence counts of one graph, tied to the digest of the system that produced it."""

    counts: np.ndarray
    digest: str

    def __post_init__(self):
        assert_true(self.counts.ndim == 1, IllegalArgumentException("A count vector is one-dimensional"))
        if self.counts.size:
            assert_true(
                np.issubdtype(self.counts.dtype, np.integer),
                IllegalArgumentException(f"Counts must be integers, got {self.counts.dtype}"),
            )
            assert_true(bool((self.counts >= 0).all()), IllegalArgumentException("Counts must be non-negative"))

    def __len__(self) -> int:
        return int(self.counts.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountVector):
            return NotImplemented
        return self.digest == other.digest and np.array_equal(self.counts, other.counts)

    def __hash__(self) -> int:
        return hash((self.digest, self.counts.tobytes()))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def nonzero(self) -> List[Tuple[int, int]]:
        return [(int(i), int(self.counts[i])) for i in np.flatnonzero(self.counts)]

    def check_system(self, system: "ConstraintSystem") -> None:
        system.check_length(len(self))
        assert_true(
            self.digest == system.digest,
            SystemMismatchError(f"The vector was built with system {self.digest[:12]}, not {system.digest[:12]}"),
        )

    def to_text(self) -> str:
        """Sparse text form: a header naming the system digest and the length, then one `index:count` per line

        >>> print(CountVector(np.array([0, 2, 0, 1]), "abc").to_text(), end="")
        satvec-vector v1 abc 4
        1:2
        3:1
        """
        lines = [f"{HEADER} {self.digest} {len(self)}"]
        lines.extend(f"{index}:{count}" for index, count in self.nonzero())
        return "\n".join(lines) + "\n"


def zero_vector(system: "ConstraintSystem") -> CountVector:
    return CountVector(np.zeros(system.length, dtype=COUNT_DTYPE), system.digest)


def vector_from_counts(counts: Iterable[int], system: "ConstraintSystem") -> CountVector:
    array = np.asarray(list(counts))
    if array.size and not np.issubdtype(array.dtype, np.integer):
        assert_true(
            bool(np.all(np.mod(array, 1) == 0)), IllegalArgumentException("Counts must be integers")
        )
    vector = CountVector(array.astype(COUNT_DTYPE), system.digest)
    system.check_length(len(vector))
    return vector


def vector_from_text(text: str, system: Optional["ConstraintSystem"] = None) -> CountVector:
    """Read the form written by `CountVector.to_text`, checking it against `system` when given.

    >>> vector_from_text("satvec-vector v1 abc 3\\n2:5\\n").counts.tolist()
    [0, 0, 5]
    >>> vector_from_text("satvec-vector v1 abc 3\\n2:-5\\n")
    Traceback (most recent call last):
    ...
    satvec.exceptions.IllegalArgumentException: Counts must be non-negative
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    assert_true(
        bool(lines) and lines[0].startswith(HEADER),
        IllegalArgumentException(f"Expected a '{HEADER}' header"),
    )
    words = lines[0][len(HEADER) :].split()
    assert_true(len(words) == 2, IllegalArgumentException(f"Malformed vector header '{lines[0]}'"))
    digest, length = words[0], int(words[1])
    counts = np.zeros(length, dtype=COUNT_DTYPE)
    for line in lines[1:]:
        index, _, count = line.partition(":")
        try:
            position, value = int(index), int(count)
        except ValueError:
            raise IllegalArgumentException(f"Malformed vector entry '{line}'")
        assert_true(0 <= position < length, IllegalArgumentException(f"Index {position} is outside [0, {length})"))
        counts[position] = value
    vector = CountVector(counts, digest)
    if system is not None:
        vector.check_system(system)
    return vector

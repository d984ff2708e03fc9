from typing import Optional, Sequence, Tuple

import numpy as np

ALGORITHM = "numpy.PCG64/SeedSequence"


class RandomStream:
    """Seedable, splittable deterministic stream.

    Children are derived from the seed and a spawn key only, never from the parent's consumed state,
    so `child(i)` is the same stream however much the parent was used before.

    >>> a, b = RandomStream(42), RandomStream(42)
    >>> bool((a.permutation(10) == b.permutation(10)).all())
    True
    >>> bool((RandomStream(42).child(0).permutation(50) == RandomStream(42).child(1).permutation(50)).all())
    False
    """

    def __init__(self, seed: int, spawn_key: Tuple[int, ...] = ()):
        self.seed = seed
        self.spawn_key = tuple(spawn_key)
        self._generator: Optional[np.random.Generator] = None

    @property
    def generator(self) -> np.random.Generator:
        if self._generator is None:
            sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=self.spawn_key)
            self._generator = np.random.Generator(np.random.PCG64(sequence))
        return self._generator

    def child(self, index: int) -> "RandomStream":
        return RandomStream(self.seed, self.spawn_key + (index,))

    def permutation(self, size: int) -> np.ndarray:
        return self.generator.permutation(size)

    def shuffled(self, items: Sequence) -> list:
        return [items[i] for i in self.permutation(len(items))]

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed}, spawn_key={self.spawn_key})"

import copy
import hashlib
import io
import json
import logging
import zipfile
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np

from satvec.constraint_gen_impl.constraint_set import ConstraintSet
from satvec.constraint_gen_impl.constraints import (
    ORDERED_FAMILY,
    PARENT_FAMILY,
    SEQUENCE_FAMILY,
    UNORDERED_FAMILY,
    Constraint,
    OrderedConstraint,
    ParentConstraint,
    SequenceConstraint,
    UnorderedConstraint,
)
from satvec.constraint_gen_impl.generate import DEFAULT_WIDTHS, Widths, generate_constraint_set
from satvec.constraint_gen_impl.partitions import CELL_DTYPE, Cell, Partitioning, Universe
from satvec.exceptions import IllegalArgumentException, SignatureError, SystemMismatchError
from satvec.random_stream import ALGORITHM, RandomStream
from satvec.signature import PlaceholderBinder, Signature, signature_from_text
from satvec.symbols import Symbol
from satvec.utils import assert_true

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
MANIFEST = "manifest.json"
ZIP_DATE_TIME = (1980, 1, 1, 0, 0, 0)

_FAMILY_CODES = {ORDERED_FAMILY: 0, UNORDERED_FAMILY: 1, PARENT_FAMILY: 2, SEQUENCE_FAMILY: 3}
_FAMILY_CLASSES = {0: OrderedConstraint, 1: UnorderedConstraint, 2: ParentConstraint, 3: SequenceConstraint}
# family, rooted, lead partition, lead cell, position, terminated, arity, then (partition, cell) per argument
_FIXED_COLUMNS = 7


@dataclass
class ConstraintSystem:
    """The symbol universe and the t parallel constraint sets, with the index of every vector coordinate.

    Symbols come first, in the fixed symbol order, then the constraints of each set in generation order.
    """

    signature: Signature
    widths: Widths
    t: int
    seed: int
    universe: Universe
    sets: Tuple[ConstraintSet, ...]
    bindings: Dict[str, Dict[str, str]] = field(default_factory=dict)
    """Placeholder bindings recorded for the corpus this system is used with"""

    @property
    def symbol_count(self) -> int:
        return len(self.universe)

    @property
    def constraint_count(self) -> int:
        return sum(len(s) for s in self.sets)

    @property
    def length(self) -> int:
        return self.symbol_count + self.constraint_count

    @property
    def offsets(self) -> Tuple[int, ...]:
        """Vector index of the first constraint of every set"""
        offsets = []
        offset = self.symbol_count
        for constraint_set in self.sets:
            offsets.append(offset)
            offset += len(constraint_set)
        return tuple(offsets)

    @property
    def row_slices(self) -> List[slice]:
        """The symbol range then one range per parallel set"""
        slices = [slice(0, self.symbol_count)]
        for offset, constraint_set in zip(self.offsets, self.sets):
            slices.append(slice(offset, offset + len(constraint_set)))
        return slices

    def symbol_index(self, symbol: Symbol) -> int:
        return self.universe.index(symbol)

    def constraint_index(self, set_index: int, constraint: Union[Constraint, int]) -> int:
        local = constraint if isinstance(constraint, int) else self.sets[set_index].index(constraint)
        return self.offsets[set_index] + local

    def locate(self, index: int) -> Tuple[int, int]:
        """(set index, local index) of a constraint coordinate; set index -1 for symbols"""
        if index < self.symbol_count:
            return -1, index
        for set_index, (offset, constraint_set) in enumerate(zip(self.offsets, self.sets)):
            if index < offset + len(constraint_set):
                return set_index, index - offset
        raise IllegalArgumentException(f"Index {index} is outside a vector of length {self.length}")

    def binder(self) -> PlaceholderBinder:
        return PlaceholderBinder(self.signature, copy.deepcopy(self.bindings))

    def with_bindings(self, bindings: Dict[str, Dict[str, str]]) -> "ConstraintSystem":
        return replace(self, bindings=copy.deepcopy(bindings))

    def truncate(self, t: int) -> "ConstraintSystem":
        """The system made of the first t parallel sets"""
        assert_true(1 <= t <= self.t, IllegalArgumentException(f"Cannot truncate {self.t} sets to {t}"))
        return replace(self, t=t, sets=self.sets[:t])

    def _manifest(self) -> dict:
        return {
            "version": FORMAT_VERSION,
            "random_stream": ALGORITHM,
            "signature": self.signature.to_text(),
            "widths": self.widths.to_dict(),
            "t": self.t,
            "seed": self.seed,
            "symbol_count": self.symbol_count,
            "set_sizes": [len(s) for s in self.sets],
            "bindings": self.bindings,
        }

    def _arrays(self) -> Dict[str, np.ndarray]:
        arrays = {}
        for i, constraint_set in enumerate(self.sets):
            arrays[f"set{i}/partitions.npy"] = _partition_table(constraint_set, len(self.universe))
            arrays[f"set{i}/constraints.npy"] = _constraint_table(constraint_set)
        return arrays

    @property
    def digest(self) -> str:
        """sha256 over everything that determines the vector layout (bindings excluded)"""
        cached = self.__dict__.get("_digest")
        if cached is not None:
            return cached
        manifest = self._manifest()
        del manifest["bindings"]
        sha = hashlib.sha256(json.dumps(manifest, sort_keys=True).encode("utf-8"))
        for name, array in sorted(self._arrays().items()):
            sha.update(name.encode("utf-8"))
            sha.update(np.ascontiguousarray(array).tobytes())
        digest = sha.hexdigest()
        self.__dict__["_digest"] = digest
        return digest

    def check_length(self, length: int) -> None:
        assert_true(
            length == self.length,
            SystemMismatchError(f"Vector length {length} does not match the system length {self.length}"),
        )

    def save(self, path: Union[str, Path]) -> None:
        """Write a deterministic zip archive: the same system always produces the same bytes."""
        with zipfile.ZipFile(path, "w") as archive:
            _write_entry(archive, MANIFEST, json.dumps(self._manifest(), sort_keys=True, indent=2).encode("utf-8"))
            for name, array in sorted(self._arrays().items()):
                buffer = io.BytesIO()
                np.lib.format.write_array(buffer, array, allow_pickle=False)
                _write_entry(archive, name, buffer.getvalue())
        logger.info("Saved constraint system %s to %s", self.digest[:12], path)


def _write_entry(archive: zipfile.ZipFile, name: str, data: bytes) -> None:
    info = zipfile.ZipInfo(name, date_time=ZIP_DATE_TIME)
    info.compress_type = zipfile.ZIP_DEFLATED
    info.external_attr = 0o644 << 16
    archive.writestr(info, data)


def _partition_table(constraint_set: ConstraintSet, universe_size: int) -> np.ndarray:
    table = np.empty((len(constraint_set.partitions), universe_size), dtype=CELL_DTYPE)
    for row, partition in enumerate(constraint_set.partitions):
        table[row] = partition.assignment
    return table


def _constraint_table(constraint_set: ConstraintSet) -> np.ndarray:
    width = _FIXED_COLUMNS + 2 * max((c.arity for c in constraint_set.constraints), default=0)
    table = np.full((len(constraint_set), width), -1, dtype=np.int32)
    for row, constraint in enumerate(constraint_set.constraints):
        position, terminated = -1, -1
        if isinstance(constraint, SequenceConstraint):
            position, terminated = constraint.position, int(constraint.terminated)
        values = [
            _FAMILY_CODES[constraint.family],
            int(constraint.rooted),
            constraint.lead.partition.id,
            constraint.lead.index,
            position,
            terminated,
            constraint.arity,
        ]
        for cell in constraint.args:
            values.extend((cell.partition.id, cell.index))
        table[row, : len(values)] = values
    return table


def _read_set(universe: Universe, partitions_table: np.ndarray, constraints_table: np.ndarray) -> ConstraintSet:
    partitions = []
    for row in range(partitions_table.shape[0]):
        assignment = partitions_table[row].astype(CELL_DTYPE)
        partition = Partitioning(universe, assignment, int(assignment.max(initial=-1)) + 1)
        partition.id = row
        partitions.append(partition)
    constraints: List[Constraint] = []
    for row in constraints_table.tolist():
        family, rooted, lead_partition, lead_cell, position, terminated, arity = row[:_FIXED_COLUMNS]
        cells = row[_FIXED_COLUMNS : _FIXED_COLUMNS + 2 * arity]
        args = tuple(Cell(partitions[p], c) for p, c in zip(cells[0::2], cells[1::2]))
        lead = Cell(partitions[lead_partition], lead_cell)
        cls = _FAMILY_CLASSES[family]
        if cls is SequenceConstraint:
            constraints.append(SequenceConstraint(bool(rooted), lead, args, position=position, terminated=bool(terminated)))
        else:
            constraints.append(cls(bool(rooted), lead, args))
    return ConstraintSet(universe, constraints, partitions)


def load_system(path: Union[str, Path]) -> ConstraintSystem:
    """Read a system written by `ConstraintSystem.save`. Nothing is regenerated."""
    with zipfile.ZipFile(path, "r") as archive:
        manifest = json.loads(archive.read(MANIFEST).decode("utf-8"))
        assert_true(
            manifest.get("version") == FORMAT_VERSION,
            SystemMismatchError(f"{path}: unsupported system format version {manifest.get('version')}"),
        )
        signature = signature_from_text(manifest["signature"])
        universe = Universe(signature.universe)
        assert_true(
            len(universe) == manifest["symbol_count"],
            SystemMismatchError(f"{path}: the signature expands to {len(universe)} symbols, expected {manifest['symbol_count']}"),
        )
        sets = []
        for i in range(manifest["t"]):
            partitions = np.lib.format.read_array(io.BytesIO(archive.read(f"set{i}/partitions.npy")), allow_pickle=False)
            constraints = np.lib.format.read_array(io.BytesIO(archive.read(f"set{i}/constraints.npy")), allow_pickle=False)
            sets.append(_read_set(universe, partitions, constraints))
    system = ConstraintSystem(
        signature=signature,
        widths=Widths(**manifest["widths"]),
        t=manifest["t"],
        seed=manifest["seed"],
        universe=universe,
        sets=tuple(sets),
        bindings=manifest.get("bindings", {}),
    )
    logger.info("Loaded constraint system %s from %s", system.digest[:12], path)
    return system


def build_system(signature: Signature, widths: Widths = DEFAULT_WIDTHS, t: int = 1, seed: int = 0) -> ConstraintSystem:
    """Generate the t parallel constraint sets of `signature`.

    Set i draws from `RandomStream(seed).child(i)`, so equal arguments give identical systems.

    >>> from satvec.signature import declare_signature
    >>> system = build_system(declare_signature(["f/2"], ["a/0", "b/0"]), Widths(parent=2, parent_cells=1), t=2)
    >>> system.symbol_count, [len(s) for s in system.sets]
    (3, [6, 6])
    """
    assert_true(t >= 1, IllegalArgumentException(f"The number of parallel sets must be at least 1, got {t}"))
    violations = signature.cap_violations()
    if violations:
        raise SignatureError("; ".join(violations))
    assert_true(
        widths.parents_enabled or signature.max_parents == 1,
        IllegalArgumentException("Parent constraints can only be disabled when max_parents is 1"),
    )
    universe = Universe(signature.universe)
    stream = RandomStream(seed)
    sets = tuple(generate_constraint_set(signature, widths, stream.child(i), universe) for i in range(t))
    system = ConstraintSystem(signature, widths, t, seed, universe, sets)
    logger.info(
        "Built constraint system: %s symbols, %s constraints in %s parallel sets",
        system.symbol_count,
        system.constraint_count,
        t,
    )
    return system

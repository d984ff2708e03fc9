from pathlib import Path

import pytest

from satvec.constraint_gen import Widths
from satvec.constraint_system import ConstraintSystem, build_system, load_system
from satvec.exceptions import IllegalArgumentException, SignatureError
from satvec.signature import declare_signature
from satvec.symbols import Symbol


def test_build_system_layout(pair_system: ConstraintSystem):
    assert pair_system.symbol_count == 3
    assert [len(s) for s in pair_system.sets] == [6, 6]
    assert pair_system.length == 3 + 12
    assert pair_system.offsets == (3, 9)
    assert [(s.start, s.stop) for s in pair_system.row_slices] == [(0, 3), (3, 9), (9, 15)]
    assert pair_system.locate(0) == (-1, 0)
    assert pair_system.locate(10) == (1, 1)
    assert pair_system.symbol_index(Symbol("f", 2)) == 2


def test_same_arguments_give_byte_identical_files(pair_signature, tmp_path: Path):
    first, second = tmp_path / "first.zip", tmp_path / "second.zip"
    build_system(pair_signature, Widths(parent_cells=1), t=3, seed=9).save(first)
    build_system(pair_signature, Widths(parent_cells=1), t=3, seed=9).save(second)
    assert first.read_bytes() == second.read_bytes()


def test_saved_system_loads_back(tree_system: ConstraintSystem, tmp_path: Path):
    path = tmp_path / "system.zip"
    tree_system.save(path)
    loaded = load_system(path)
    assert loaded.digest == tree_system.digest
    assert loaded.signature.to_text() == tree_system.signature.to_text()
    assert loaded.widths == tree_system.widths
    assert loaded.length == tree_system.length
    for original, reloaded in zip(tree_system.sets, loaded.sets):
        assert original.family_counts() == reloaded.family_counts()


def test_bindings_are_saved_but_do_not_change_the_digest(pair_system: ConstraintSystem, tmp_path: Path):
    bound = pair_system.with_bindings({"word": {"Texas": "word1"}})
    assert bound.digest == pair_system.digest
    path = tmp_path / "bound.zip"
    bound.save(path)
    assert load_system(path).bindings == {"word": {"Texas": "word1"}}


def test_seed_changes_the_digest(pair_signature):
    first = build_system(pair_signature, Widths(parent_cells=1), t=2, seed=1)
    second = build_system(pair_signature, Widths(parent_cells=1), t=2, seed=2)
    assert first.digest == build_system(pair_signature, Widths(parent_cells=1), t=2, seed=1).digest
    assert first.digest != second.digest


def test_truncate_keeps_the_first_sets(tree_system: ConstraintSystem):
    truncated = tree_system.truncate(1)
    assert truncated.t == 1
    assert truncated.sets == tree_system.sets[:1]
    assert truncated.length == tree_system.symbol_count + len(tree_system.sets[0])
    with pytest.raises(IllegalArgumentException):
        tree_system.truncate(4)


def test_cap_violations_are_rejected():
    signature = declare_signature(["p/4"], ["a/0"], max_ordered_arity=3)
    with pytest.raises(SignatureError):
        build_system(signature)

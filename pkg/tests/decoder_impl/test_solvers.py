import stat
import sys
from pathlib import Path

import pytest

from satvec.decoder_impl.solvers import (
    SAT,
    UNKNOWN,
    UNSAT,
    ExternalSolverBackend,
    PySatBackend,
    get_backend,
    parse_solver_output,
)
from satvec.exceptions import IllegalArgumentException, SolverUnavailableError


def test_pysat_session_solves_incrementally():
    with PySatBackend().session([[1, 2], [-1]]) as session:
        result = session.solve()
        assert result.status == SAT
        assert 2 in result.model
        session.add_clause([-2])
        assert session.solve().status == UNSAT


def test_pysat_session_assumptions():
    with PySatBackend().session([[1, 2]]) as session:
        assert session.solve([-1, -2]).status == UNSAT
        assert session.solve([-1]).status == SAT


def test_expired_budget_is_unknown():
    with PySatBackend().session([[1]]) as session:
        assert session.solve(timeout=0).status == UNKNOWN


def test_get_backend(monkeypatch):
    monkeypatch.delenv("SATVEC_SOLVER_BACKEND", raising=False)
    assert isinstance(get_backend(), PySatBackend)
    assert isinstance(get_backend("external"), ExternalSolverBackend)
    monkeypatch.setenv("SATVEC_SOLVER_BACKEND", "external")
    assert isinstance(get_backend(), ExternalSolverBackend)
    with pytest.raises(IllegalArgumentException):
        get_backend("other")


def test_parse_solver_output_without_status():
    assert parse_solver_output("c nothing\n").status == UNKNOWN


def test_missing_external_solver(monkeypatch):
    monkeypatch.setenv("SATVEC_EXTERNAL_SOLVER", "satvec-no-such-solver --quiet")
    session = ExternalSolverBackend().session([[1]])
    with pytest.raises(SolverUnavailableError):
        session.solve()


@pytest.mark.skipif(sys.platform == "win32", reason="needs a POSIX shell")
def test_external_solver_reads_status_and_model_lines(tmp_path: Path):
    script = tmp_path / "fake_solver.sh"
    script.write_text('#!/bin/sh\ngrep -q "^p cnf" "$1" && printf "s SATISFIABLE\\nv 1 -2 0\\n"\n')
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    session = ExternalSolverBackend(str(script)).session([[1], [-2]])
    result = session.solve(timeout=30)
    assert result.status == SAT
    assert result.model == [1, -2]

import logging
import os
import shlex
import subprocess
import tempfile
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Sequence

from pysat.formula import CNF
from pysat.solvers import Solver

from satvec import conf
from satvec.exceptions import IllegalArgumentException, SolverUnavailableError

logger = logging.getLogger(__name__)

SAT = "sat"
UNSAT = "unsat"
UNKNOWN = "unknown"

PYSAT_BACKEND = "pysat"
EXTERNAL_BACKEND = "external"


@dataclass(frozen=True)
class SolveResult:
    status: str
    model: Optional[List[int]] = None

    @property
    def is_sat(self) -> bool:
        return self.status == SAT


class SolverSession(ABC):
    """One formula loaded in a solver. Clauses may be added between calls to `solve`."""

    @abstractmethod
    def add_clause(self, clause: Sequence[int]) -> None:
        ...

    @abstractmethod
    def solve(self, assumptions: Sequence[int] = (), timeout: Optional[float] = None) -> SolveResult:
        ...

    def close(self) -> None:
        pass

    def __enter__(self) -> "SolverSession":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()


class SolverBackend(ABC):
    name: str = ""

    @abstractmethod
    def session(self, clauses: List[List[int]]) -> SolverSession:
        ...


class _PySatSession(SolverSession):
    def __init__(self, solver_name: str, clauses: List[List[int]]):
        try:
            self._solver = Solver(name=solver_name, bootstrap_with=clauses)
        except (NotImplementedError, ValueError, ImportError) as e:
            raise SolverUnavailableError(f"pysat solver '{solver_name}' is not available: {e}")

    def add_clause(self, clause: Sequence[int]) -> None:
        self._solver.add_clause(list(clause))

    def solve(self, assumptions: Sequence[int] = (), timeout: Optional[float] = None) -> SolveResult:
        if timeout is None:
            status = self._solver.solve(assumptions=list(assumptions))
        else:
            if timeout <= 0:
                return SolveResult(UNKNOWN)
            timer = threading.Timer(timeout, self._solver.interrupt)
            timer.start()
            try:
                status = self._solver.solve_limited(assumptions=list(assumptions), expect_interrupt=True)
            finally:
                timer.cancel()
                self._solver.clear_interrupt()
        if status is None:
            return SolveResult(UNKNOWN)
        if status:
            return SolveResult(SAT, list(self._solver.get_model() or []))
        return SolveResult(UNSAT)

    def close(self) -> None:
        self._solver.delete()


class PySatBackend(SolverBackend):
    """In-process solving through pysat; a timer interrupts the solver when the budget expires."""

    name = PYSAT_BACKEND

    def __init__(self, solver_name: Optional[str] = None):
        self.solver_name = solver_name or os.getenv("SATVEC_SOLVER_NAME") or conf.SOLVER_NAME

    def session(self, clauses: List[List[int]]) -> SolverSession:
        return _PySatSession(self.solver_name, clauses)


def parse_solver_output(output: str) -> SolveResult:
    """Read the `s` status line and the `v` model lines of a DIMACS solver.

    >>> parse_solver_output("c comment\\ns SATISFIABLE\\nv 1 -2\\nv 3 0\\n")
    SolveResult(status='sat', model=[1, -2, 3])
    >>> parse_solver_output("s UNSATISFIABLE\\n").status
    'unsat'
    """
    status = UNKNOWN
    model: List[int] = []
    for line in output.splitlines():
        if line.startswith("s "):
            answer = line[2:].strip()
            if answer == "SATISFIABLE":
                status = SAT
            elif answer == "UNSATISFIABLE":
                status = UNSAT
        elif line.startswith("v "):
            model.extend(lit for lit in (int(word) for word in line[2:].split()) if lit != 0)
    return SolveResult(status, model if status == SAT else None)


class _ExternalSession(SolverSession):
    def __init__(self, command: List[str], clauses: List[List[int]]):
        self.command = command
        self.clauses = [list(clause) for clause in clauses]

    def add_clause(self, clause: Sequence[int]) -> None:
        self.clauses.append(list(clause))

    def solve(self, assumptions: Sequence[int] = (), timeout: Optional[float] = None) -> SolveResult:
        if timeout is not None and timeout <= 0:
            return SolveResult(UNKNOWN)
        cnf = CNF(from_clauses=self.clauses + [[lit] for lit in assumptions])
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "formula.cnf")
            cnf.to_file(path)
            try:
                completed = subprocess.run(  # nosec B603
                    self.command + [path], capture_output=True, text=True, timeout=timeout, check=False
                )
            except FileNotFoundError:
                raise SolverUnavailableError(f"Solver command not found: {self.command[0]}")
            except subprocess.TimeoutExpired:
                return SolveResult(UNKNOWN)
        result = parse_solver_output(completed.stdout)
        if result.status == UNKNOWN:
            logger.warning("External solver returned %s without a status line", completed.returncode)
        return result


class ExternalSolverBackend(SolverBackend):
    """Writes the formula in DIMACS and runs a solver binary printing `s` and `v` lines."""

    name = EXTERNAL_BACKEND

    def __init__(self, command: Optional[str] = None):
        command = command or os.getenv("SATVEC_EXTERNAL_SOLVER") or conf.EXTERNAL_SOLVER_COMMAND
        self.command = shlex.split(command)

    def session(self, clauses: List[List[int]]) -> SolverSession:
        return _ExternalSession(self.command, clauses)


def get_backend(name: Optional[str] = None, solver_name: Optional[str] = None) -> SolverBackend:
    name = name or os.getenv("SATVEC_SOLVER_BACKEND") or conf.SOLVER_BACKEND
    if name == PYSAT_BACKEND:
        return PySatBackend(solver_name)
    if name == EXTERNAL_BACKEND:
        return ExternalSolverBackend()
    raise IllegalArgumentException(f"Unknown solver backend '{name}', expected '{PYSAT_BACKEND}' or '{EXTERNAL_BACKEND}'")

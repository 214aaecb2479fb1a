"""Desk-scale satisfiability: exhaustive enumeration, DPLL, forcing checks.

The exhaustive engine evaluates the whole truth table bit-parallel: each
variable maps to a big-integer column whose bit ``j`` is that variable's
value in assignment number ``j`` (variable ``i`` is bit ``i - 1`` of an
ascending assignment counter).  A clause mask ORs its literal columns, a
formula mask ANDs its clause masks, and the surviving bits are exactly
the models.  This keeps full enumeration over 2^21 assignments in the
tens of milliseconds while remaining an exact, deterministic sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .formula import Clause, CnfFormula

Assignment = dict[int, bool]

DEFAULT_VAR_LIMIT = 24


class VariableLimitError(ValueError):
    """Raised when a formula is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class SatVerdict:
    satisfiable: bool
    witness: Assignment | None
    method: str  # "exhaustive" or "dpll"
    explored: int  # assignments enumerated, or branching decisions taken


@dataclass(frozen=True)
class ForcingReport:
    """Exhaustive summary of which variables every model agrees on."""

    satisfiable: bool
    forced_true: frozenset[int]
    forced_false: frozenset[int]
    model_count: int


def evaluate(formula: CnfFormula, assignment: Mapping[int, bool]) -> bool:
    """True iff every clause has at least one satisfied literal.

    The assignment must cover every variable the formula references.
    """
    missing = sorted(formula.variables() - assignment.keys())
    if missing:
        raise ValueError(f"partial assignment: missing variables {missing}")
    for clause in formula.clauses:
        for lit in clause:
            if assignment[abs(lit)] == (lit > 0):
                break
        else:
            return False
    return True


class _TruthTable:
    """Bit-parallel truth table over an explicit variable list.

    ``variables[i]`` occupies bit position ``i`` of the assignment
    counter; assignment number ``j`` sets ``variables[i]`` true iff bit
    ``i`` of ``j`` is set.
    """

    def __init__(self, variables: Sequence[int]):
        self.variables = tuple(variables)
        self.n = len(self.variables)
        self.size = 1 << self.n
        self.full = (1 << self.size) - 1
        self._position = {v: i for i, v in enumerate(self.variables)}
        self._columns: dict[int, int] = {}

    def column(self, var: int) -> int:
        cached = self._columns.get(var)
        if cached is not None:
            return cached
        bit = self._position[var]
        period = 1 << (bit + 1)
        col = ((1 << (1 << bit)) - 1) << (1 << bit)
        width = period
        while width < self.size:
            col |= col << width
            width <<= 1
        self._columns[var] = col
        return col

    def literal_mask(self, lit: int) -> int:
        col = self.column(abs(lit))
        return col if lit > 0 else self.full ^ col

    def clause_mask(self, clause: Clause) -> int:
        mask = 0
        for lit in clause:
            mask |= self.literal_mask(lit)
        return mask

    def formula_mask(self, clauses: Iterable[Clause]) -> int:
        mask = self.full
        for clause in clauses:
            mask &= self.clause_mask(clause)
            if not mask:
                break
        return mask

    def assignment_at(self, index: int) -> Assignment:
        return {v: bool((index >> i) & 1) for i, v in enumerate(self.variables)}


def solve_exhaustive(formula: CnfFormula, var_limit: int = DEFAULT_VAR_LIMIT) -> SatVerdict:
    """Decide satisfiability by enumerating all 2^num_vars assignments.

    The witness is the first satisfying assignment in ascending counter
    order.  Raises VariableLimitError when num_vars exceeds var_limit.
    """
    n = formula.num_vars
    if n > var_limit:
        raise VariableLimitError(f"{n} variables exceed the exhaustive limit of {var_limit}")
    table = _TruthTable(range(1, n + 1))
    mask = table.formula_mask(formula.clauses)
    if not mask:
        return SatVerdict(satisfiable=False, witness=None, method="exhaustive", explored=table.size)
    first = (mask & -mask).bit_length() - 1
    witness = table.assignment_at(first)
    if not evaluate(formula, witness):
        raise RuntimeError("internal error: exhaustive witness failed re-evaluation")
    return SatVerdict(satisfiable=True, witness=witness, method="exhaustive", explored=table.size)


def verify_forcing(
    clauses: Sequence[Clause], designated: int, var_limit: int = DEFAULT_VAR_LIMIT
) -> ForcingReport:
    """Enumerate all assignments of a clause collection and report the
    variables fixed to the same value in every model.

    The designated variable must occur in the collection.  Variable
    indices need not be contiguous; enumeration runs over the referenced
    variables only.
    """
    universe: set[int] = set()
    for clause in clauses:
        universe.update(clause.variables())
    if designated not in universe:
        raise ValueError(f"designated variable {designated} does not occur in the clauses")
    ordered = sorted(universe)
    if len(ordered) > var_limit:
        raise VariableLimitError(f"{len(ordered)} variables exceed the exhaustive limit of {var_limit}")
    table = _TruthTable(ordered)
    mask = table.formula_mask(clauses)
    count = mask.bit_count()
    forced_true: set[int] = set()
    forced_false: set[int] = set()
    if count:
        for var in ordered:
            col = table.column(var)
            if mask & (table.full ^ col) == 0:
                forced_true.add(var)
            elif mask & col == 0:
                forced_false.add(var)
    return ForcingReport(
        satisfiable=count > 0,
        forced_true=frozenset(forced_true),
        forced_false=frozenset(forced_false),
        model_count=count,
    )


def solve_dpll(formula: CnfFormula, assumptions: Mapping[int, bool] | None = None) -> SatVerdict:
    """Decide satisfiability by DPLL search.

    Unit propagation and pure-literal elimination run to fixpoint before
    each decision; the branching variable is the lowest-index variable in
    the residual formula, true branch first, so runs are deterministic.
    ``assumptions`` seed fixed values (used to check that a model of an
    original formula extends to a model of its reduction).
    """
    clauses = [list(clause.lits) for clause in formula.clauses]
    if assumptions:
        for var, value in sorted(assumptions.items()):
            clauses.append([var if value else -var])
    decisions = 0

    def assign(clauses: list[list[int]], lit: int) -> list[list[int]] | None:
        # Returns the simplified clause list, or None on an emptied clause.
        out: list[list[int]] = []
        for clause in clauses:
            if lit in clause:
                continue
            if -lit in clause:
                reduced = [l for l in clause if l != -lit]
                if not reduced:
                    return None
                out.append(reduced)
            else:
                out.append(clause)
        return out

    def propagate(
        clauses: list[list[int]], assignment: Assignment
    ) -> tuple[list[list[int]], Assignment] | None:
        while True:
            unit = next((c[0] for c in clauses if len(c) == 1), None)
            if unit is not None:
                assignment[abs(unit)] = unit > 0
                next_clauses = assign(clauses, unit)
                if next_clauses is None:
                    return None
                clauses = next_clauses
                continue
            polarity: dict[int, int] = {}
            for clause in clauses:
                for lit in clause:
                    var = abs(lit)
                    sign = 1 if lit > 0 else -1
                    polarity[var] = 0 if polarity.get(var, sign) != sign else sign
            pure = next((v for v in sorted(polarity) if polarity[v] != 0), None)
            if pure is None:
                return clauses, assignment
            lit = pure * polarity[pure]
            assignment[abs(lit)] = lit > 0
            next_clauses = assign(clauses, lit)
            if next_clauses is None:
                return None  # unreachable: a pure literal cannot empty a clause
            clauses = next_clauses

    def search(clauses: list[list[int]], assignment: Assignment) -> Assignment | None:
        nonlocal decisions
        propagated = propagate(clauses, assignment)
        if propagated is None:
            return None
        clauses, assignment = propagated
        if not clauses:
            return assignment
        var = min(abs(lit) for clause in clauses for lit in clause)
        for value in (True, False):
            decisions += 1
            child = assign(clauses, var if value else -var)
            if child is None:
                continue
            child_assignment = dict(assignment)
            child_assignment[var] = value
            result = search(child, child_assignment)
            if result is not None:
                return result
        return None

    model = search(clauses, {})
    if model is None:
        return SatVerdict(satisfiable=False, witness=None, method="dpll", explored=decisions)
    witness = {v: model.get(v, False) for v in range(1, formula.num_vars + 1)}
    if not evaluate(formula, witness):
        raise RuntimeError("internal error: DPLL witness failed re-evaluation")
    return SatVerdict(satisfiable=True, witness=witness, method="dpll", explored=decisions)


def check_equisat(
    original: CnfFormula, reduced: CnfFormula, var_limit: int = DEFAULT_VAR_LIMIT
) -> bool:
    """True iff both formulas have the same SAT verdict.

    Each side is decided exhaustively when it fits under var_limit and by
    DPLL otherwise.
    """
    return _decide(original, var_limit).satisfiable == _decide(reduced, var_limit).satisfiable


def _decide(formula: CnfFormula, var_limit: int = DEFAULT_VAR_LIMIT) -> SatVerdict:
    if formula.num_vars <= var_limit:
        return solve_exhaustive(formula, var_limit)
    return solve_dpll(formula)


def restrict_model(assignment: Mapping[int, bool], variables: Iterable[int]) -> Assignment:
    """Restrict an assignment to the given variables."""
    wanted = set(variables)
    missing = sorted(wanted - assignment.keys())
    if missing:
        raise ValueError(f"variables not in assignment domain: {missing}")
    return {v: assignment[v] for v in wanted}

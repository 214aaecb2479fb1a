"""Value-semantic CNF model: clauses over pairwise-distinct variables.

Literals follow the DIMACS convention: a positive integer ``v`` is the
positive literal of variable ``v``, and ``-v`` is its negation.  Variables
are 1-based.  All types in this module are immutable after construction;
transformations build new values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class FormulaError(ValueError):
    """Raised when a clause or formula violates a structural invariant."""


class Polarity(enum.Enum):
    ALL_POSITIVE = "all-positive"
    ALL_NEGATIVE = "all-negative"
    MIXED = "mixed"

    def __str__(self) -> str:
        return self.value


class ClauseKind(NamedTuple):
    width: int
    polarity: Polarity


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals over pairwise-distinct variables.

    Literals are stored canonically, sorted by variable index, so two
    clauses over the same literal set compare and hash equal.  A clause
    mentioning the same variable twice is rejected at construction, with
    opposite polarities (a tautology) called out separately: silently
    dropping such clauses would corrupt occurrence accounting downstream.
    """

    lits: tuple[int, ...]

    def __init__(self, lits: Iterable[int]):
        canonical = tuple(sorted(lits, key=abs))
        if not canonical:
            raise FormulaError("empty clause is not allowed")
        seen: set[int] = set()
        for lit in canonical:
            if lit == 0:
                raise FormulaError("literal 0 is not allowed")
            var = abs(lit)
            if var in seen:
                if -lit in canonical:
                    raise FormulaError(f"tautological clause: variable {var} appears with both polarities")
                raise FormulaError(f"duplicate variable {var} in clause")
            seen.add(var)
        object.__setattr__(self, "lits", canonical)

    @property
    def width(self) -> int:
        return len(self.lits)

    @property
    def is_positive(self) -> bool:
        return all(lit > 0 for lit in self.lits)

    @property
    def is_negative(self) -> bool:
        return all(lit < 0 for lit in self.lits)

    @property
    def is_monotone(self) -> bool:
        return self.is_positive or self.is_negative

    @property
    def is_mixed(self) -> bool:
        return not self.is_monotone

    def variables(self) -> frozenset[int]:
        return frozenset(abs(lit) for lit in self.lits)

    def negated(self) -> "Clause":
        """The literal-wise negation of this clause."""
        return Clause(-lit for lit in self.lits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lits)

    def __len__(self) -> int:
        return len(self.lits)

    def __contains__(self, lit: int) -> bool:
        return lit in self.lits

    def __repr__(self) -> str:
        return f"Clause({list(self.lits)})"


@dataclass(frozen=True)
class PolaritySplit:
    """A clause separated into its positive and negative literals."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]

    def merge(self) -> Clause:
        """Recombine the two parts into the original clause."""
        return Clause(self.positive + self.negative)


@dataclass(frozen=True)
class CnfFormula:
    """An ordered clause list over variables 1..num_vars.

    ``num_vars`` may exceed the largest referenced index (DIMACS headers
    are allowed to declare unused variables); it may never be smaller.
    Clause order is significant and preserved by every operation that
    does not explicitly reorder.
    """

    clauses: tuple[Clause, ...]
    num_vars: int

    def __init__(self, clauses: Iterable[Clause], num_vars: int | None = None):
        clause_tuple = tuple(clauses)
        max_ref = max((max(c.variables()) for c in clause_tuple), default=0)
        if num_vars is None:
            num_vars = max_ref
        if num_vars < 0:
            raise FormulaError(f"num_vars must be non-negative, got {num_vars}")
        if max_ref > num_vars:
            raise FormulaError(f"clause references variable {max_ref} beyond declared count {num_vars}")
        object.__setattr__(self, "clauses", clause_tuple)
        object.__setattr__(self, "num_vars", num_vars)

    @classmethod
    def from_ints(cls, clauses: Iterable[Iterable[int]], num_vars: int | None = None) -> "CnfFormula":
        return cls((Clause(c) for c in clauses), num_vars)

    def variables(self) -> frozenset[int]:
        """All variables referenced by at least one clause."""
        out: set[int] = set()
        for clause in self.clauses:
            out.update(clause.variables())
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __repr__(self) -> str:
        return f"CnfFormula({len(self.clauses)} clauses, {self.num_vars} vars)"


class OccurrenceTable:
    """Per-variable occurrence counters for a formula.

    Counts every literal of every clause; since clauses cannot repeat a
    variable, the literal count equals the number of clauses containing
    the variable.  Declared-but-unreferenced indices report zero.
    """

    def __init__(self, formula: CnfFormula):
        n = formula.num_vars
        pos = [0] * (n + 1)
        neg = [0] * (n + 1)
        for clause in formula.clauses:
            for lit in clause:
                if lit > 0:
                    pos[lit] += 1
                else:
                    neg[-lit] += 1
        self._pos = pos
        self._neg = neg
        self.num_vars = n

    def positive(self, var: int) -> int:
        return self._pos[var] if 0 < var <= self.num_vars else 0

    def negative(self, var: int) -> int:
        return self._neg[var] if 0 < var <= self.num_vars else 0

    def total(self, var: int) -> int:
        return self.positive(var) + self.negative(var)

    def max_total(self) -> int:
        """Largest occurrence count over all variables (0 for an empty table)."""
        return max((self.total(v) for v in range(1, self.num_vars + 1)), default=0)

    def items(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (variable, positive, negative, total) for vars 1..num_vars."""
        for v in range(1, self.num_vars + 1):
            yield v, self._pos[v], self._neg[v], self._pos[v] + self._neg[v]


def classify_clause(clause: Clause) -> ClauseKind:
    """Width and polarity class of a clause.

    A clause is all-positive or all-negative when every literal has that
    sign, and mixed otherwise; a mixed clause necessarily has width >= 2.
    """
    if clause.is_positive:
        polarity = Polarity.ALL_POSITIVE
    elif clause.is_negative:
        polarity = Polarity.ALL_NEGATIVE
    else:
        polarity = Polarity.MIXED
    return ClauseKind(clause.width, polarity)


def var_set(clause: Clause) -> frozenset[int]:
    """The underlying variable set of a clause, negations stripped."""
    return clause.variables()


def polarity_split(clause: Clause) -> PolaritySplit:
    """Separate a clause into positive and negative literals, losslessly."""
    return PolaritySplit(
        positive=tuple(lit for lit in clause.lits if lit > 0),
        negative=tuple(lit for lit in clause.lits if lit < 0),
    )


def occurrence_table(formula: CnfFormula) -> OccurrenceTable:
    """Recompute exact per-variable occurrence counts from scratch."""
    return OccurrenceTable(formula)

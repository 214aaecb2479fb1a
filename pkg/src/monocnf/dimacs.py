"""DIMACS CNF parsing and serialization.

Standard "p cnf <vars> <clauses>" documents with zero-terminated clauses.
Input accepts LF or CRLF, extra whitespace, multi-line clauses, and
interleaved comment lines; output is canonical: comment lines first, then
the header, then one clause per line with literals in ascending variable
order, LF line endings.  ``serialize(parse(serialize(doc)))`` is
byte-identical to ``serialize(doc)``.

Comment lines starting with "trace " carry clause provenance emitted by
the reduction pipelines; they are informational only and never affect
parsing semantics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import Clause, CnfFormula, FormulaError

_HEADER_RE = re.compile(r"p\s+cnf\s+(\d+)\s+(\d+)$")


class DimacsError(ValueError):
    """Raised on malformed DIMACS input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class DimacsDocument:
    """A parsed DIMACS file: the formula plus its comment lines."""

    formula: CnfFormula
    comments: tuple[str, ...] = ()

    @property
    def declared_vars(self) -> int:
        return self.formula.num_vars

    @property
    def declared_clauses(self) -> int:
        return len(self.formula.clauses)


def parse(text: str | bytes) -> DimacsDocument:
    """Parse a DIMACS CNF document.

    Clauses appear in file order.  Raises DimacsError on: missing or
    malformed header, literals before the header, a non-integer token,
    a variable index above the declared count, a clause not terminated
    by 0, a duplicate-variable or tautological clause, or a clause count
    that disagrees with the header.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    comments: list[str] = []
    clauses: list[Clause] = []
    declared_vars: int | None = None
    declared_clauses: int | None = None
    pending: list[int] = []
    pending_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            body = line[1:]
            if body.startswith(" "):
                body = body[1:]
            comments.append(body)
            continue
        if line.startswith("p"):
            if declared_vars is not None:
                raise DimacsError("duplicate header", lineno)
            match = _HEADER_RE.match(line)
            if match is None:
                raise DimacsError(f"malformed header: {line!r}", lineno)
            declared_vars = int(match.group(1))
            declared_clauses = int(match.group(2))
            continue
        if declared_vars is None:
            raise DimacsError("clause data before header", lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"invalid literal token {token!r}", lineno) from None
            if lit == 0:
                if not pending:
                    raise DimacsError("empty clause", lineno)
                try:
                    clauses.append(Clause(pending))
                except FormulaError as exc:
                    raise DimacsError(str(exc), pending_line) from exc
                pending = []
                continue
            if not pending:
                pending_line = lineno
            if abs(lit) > declared_vars:
                raise DimacsError(f"variable {abs(lit)} exceeds declared count {declared_vars}", lineno)
            pending.append(lit)

    if declared_vars is None:
        raise DimacsError("missing header")
    if pending:
        raise DimacsError("last clause not terminated by 0", pending_line)
    if len(clauses) != declared_clauses:
        raise DimacsError(f"header declares {declared_clauses} clauses but {len(clauses)} were found")

    formula = CnfFormula(clauses, num_vars=declared_vars)
    return DimacsDocument(formula=formula, comments=tuple(comments))


def serialize(doc: DimacsDocument) -> str:
    """Render a document in canonical form (see module docstring)."""
    lines: list[str] = []
    for comment in doc.comments:
        lines.append(f"c {comment}" if comment else "c")
    lines.append(f"p cnf {doc.declared_vars} {doc.declared_clauses}")
    for clause in doc.formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause.lits) + " 0")
    return "\n".join(lines) + "\n"


def load(path: str) -> DimacsDocument:
    with open(path, "rb") as handle:
        return parse(handle.read())


def dump(doc: DimacsDocument, path: str) -> None:
    with open(path, "w", newline="\n") as handle:
        handle.write(serialize(doc))

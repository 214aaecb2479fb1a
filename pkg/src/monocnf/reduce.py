"""Clause replacement rules and the monotone-form reduction pipelines.

Three layers:

* Rules: ``gold_step`` splits one mixed 3-clause into two monotone
  clauses; ``apply_r1`` / ``apply_r2`` / ``apply_r3`` replace a monotone
  2-clause with monotone 3-clauses over fresh variables, with tightening
  occurrence guarantees (r3 leaves the two original variables untouched
  and every fresh variable occurs at most five times).
* Gadget: a fixed 25-clause monotone collection whose models all agree
  on a designated variable; instantiated per widened 2-clause so nothing
  exceeds four occurrences.
* Pipelines: ``eliminate_mixed`` (mixed 3-clauses out, 2-or-3 monotone
  in), ``to_monotone_3sat5`` (r3 per 2-clause, cap five), and
  ``to_monotone_3sat4`` (gadget per 2-clause, cap four).

Every pipeline is deterministic: clauses are processed in input order,
a replaced clause's children are inserted at its position, and fresh
variables are consecutive indices starting right after the input's
declared count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .formula import Clause, CnfFormula, polarity_split
from .profiles import PROFILES, ViolationReport, check_profile


class ProfileError(ValueError):
    """Raised when a pipeline input fails its profile check."""

    def __init__(self, message: str, report: ViolationReport):
        self.report = report
        if len(report):
            message = f"{message}: " + "; ".join(str(v) for v in report)
        super().__init__(message)


class FreshAllocator:
    """Hands out consecutive fresh variable indices, strictly increasing.

    Seed it past every existing index (``for_formula`` starts at
    ``num_vars + 1``) so allocations never collide.
    """

    def __init__(self, next_index: int):
        if next_index < 1:
            raise ValueError(f"variable indices start at 1, got {next_index}")
        self._first = next_index
        self._next = next_index

    @classmethod
    def for_formula(cls, formula: CnfFormula) -> "FreshAllocator":
        return cls(formula.num_vars + 1)

    @property
    def next_index(self) -> int:
        return self._next

    def fresh(self) -> int:
        index = self._next
        self._next += 1
        return index

    def fresh_many(self, count: int) -> tuple[int, ...]:
        return tuple(self.fresh() for _ in range(count))

    def allocated(self) -> range:
        return range(self._first, self._next)


@dataclass(frozen=True)
class RuleStats:
    """Bookkeeping for one 2-clause replacement rule: how much the two
    original variables and the worst fresh variable grow, and the rule's
    emitted clause/variable counts."""

    delta_x: int
    delta_y: int
    delta_new: int
    clauses_added: int
    vars_added: int


RULE_STATS: dict[str, RuleStats] = {
    "r1": RuleStats(delta_x=2, delta_y=2, delta_new=2, clauses_added=4, vars_added=3),
    "r2": RuleStats(delta_x=1, delta_y=1, delta_new=4, clauses_added=6, vars_added=5),
    "r3": RuleStats(delta_x=0, delta_y=0, delta_new=5, clauses_added=19, vars_added=18),
    "r3-compact": RuleStats(delta_x=0, delta_y=0, delta_new=5, clauses_added=17, vars_added=16),
}


def _monotone_pair_sign(clause: Clause, rule: str) -> int:
    if clause.width != 2:
        raise ValueError(f"{rule} requires a 2-clause, got width {clause.width}")
    if clause.is_positive:
        return 1
    if clause.is_negative:
        return -1
    raise ValueError(f"{rule} requires a monotone clause, got {clause!r}")


def gold_step(clause: Clause, alloc: FreshAllocator) -> tuple[Clause, Clause]:
    """Split a mixed 3-clause into two monotone clauses over a fresh
    bridge variable: the positive part widened by the bridge, and the
    negative part widened by its negation.

    One output has width 2 and the other width 3; original variables
    keep their occurrence counts and the bridge occurs exactly twice.
    """
    if clause.width != 3:
        raise ValueError(f"gold_step requires a 3-clause, got width {clause.width}")
    if not clause.is_mixed:
        raise ValueError(f"gold_step requires a mixed clause, got {clause!r}")
    split = polarity_split(clause)
    bridge = alloc.fresh()
    return Clause(split.positive + (bridge,)), Clause(split.negative + (-bridge,))


def apply_r1(clause: Clause, alloc: FreshAllocator) -> list[Clause]:
    """Replace a monotone 2-clause with four monotone 3-clauses: the pair
    widened by each of three fresh variables, plus one clause forcing at
    least one fresh variable to the pair's own polarity side.

    A positive pair {x, y} becomes {x,y,u}, {x,y,v}, {x,y,w},
    {-u,-v,-w}; a negative pair is the literal-wise dual.
    """
    sign = _monotone_pair_sign(clause, "apply_r1")
    u, v, w = alloc.fresh_many(3)
    return [
        Clause(clause.lits + (sign * u,)),
        Clause(clause.lits + (sign * v,)),
        Clause(clause.lits + (sign * w,)),
        Clause((-sign * u, -sign * v, -sign * w)),
    ]


def apply_r2(clause: Clause, alloc: FreshAllocator) -> list[Clause]:
    """Replace a monotone 2-clause with six monotone 3-clauses over five
    fresh variables: the pair widened by two fresh variables, then
    apply_r1 on the opposite-polarity pair of those two.

    Each original variable gains exactly one occurrence; no fresh
    variable occurs more than four times.
    """
    sign = _monotone_pair_sign(clause, "apply_r2")
    u, v = alloc.fresh_many(2)
    out = [Clause(clause.lits + (sign * u,)), Clause(clause.lits + (sign * v,))]
    out.extend(apply_r1(Clause((-sign * u, -sign * v)), alloc))
    return out


def apply_r3(clause: Clause, alloc: FreshAllocator, compact: bool = False) -> list[Clause]:
    """Replace a monotone 2-clause with monotone 3-clauses while leaving
    the occurrence counts of both original variables unchanged.

    Standard mode widens the pair by one fresh variable u and expands
    the three pairs {-u,-v}, {-u,-w}, {v,w} with apply_r2 (duals for a
    negative input): 19 clauses over 18 fresh variables.  Compact mode
    expands the last pair with apply_r1 instead: 17 clauses over 16
    fresh variables.  Either way no fresh variable occurs more than
    five times.
    """
    sign = _monotone_pair_sign(clause, "apply_r3")
    u, v, w = alloc.fresh_many(3)
    out = [Clause(clause.lits + (sign * u,))]
    out.extend(apply_r2(Clause((-sign * u, -sign * v)), alloc))
    out.extend(apply_r2(Clause((-sign * u, -sign * w)), alloc))
    last_rule = apply_r1 if compact else apply_r2
    out.extend(last_rule(Clause((sign * v, sign * w)), alloc))
    return out


# The forcing gadget: 25 monotone 3-clauses over 21 variables, numbered
# by first appearance in the emission order below.  Variable 3 is the
# designated one: the collection is satisfiable, and every model sets
# variable 3 true (the negated template forces it false).  Variable 3
# occurs exactly 3 times, variable 21 exactly twice, and no variable
# occurs more than 4 times, so adding the designated variable to one
# more clause outside the gadget stays within an occurrence cap of 4.
_GADGET_PATTERN: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 3),
    (-2, -4, -5),
    (-2, -4, -6),
    (-2, -4, -7),
    (5, 6, 7),
    (-8, -9, -5),
    (-8, -9, -6),
    (-8, -9, -7),
    (8, 10, 11),
    (9, 10, 11),
    (-1, -10, -12),
    (-1, -11, -12),
    (12, 3, 13),
    (-14, -15, -10),
    (-14, -15, -11),
    (16, 17, 14),
    (16, 17, 15),
    (-13, -16, -18),
    (-13, -17, -18),
    (12, 18, 19),
    (-19, -16, -20),
    (-19, -17, -20),
    (20, 18, 21),
    (-21, -19, -13),
)


@dataclass(frozen=True)
class GadgetTemplate:
    """The 25-clause forcing pattern with its designated variable.

    ``forces_true`` gives the sign: the as-printed pattern forces the
    designated variable true; its literal-wise negation forces false.
    """

    clauses: tuple[tuple[int, int, int], ...]
    designated: int
    forces_true: bool

    def __post_init__(self) -> None:
        counts: dict[int, int] = {}
        for pattern in self.clauses:
            clause = Clause(pattern)
            if clause.width != 3 or not clause.is_monotone:
                raise ValueError(f"gadget clauses must be monotone 3-clauses, got {pattern}")
            for var in clause.variables():
                counts[var] = counts.get(var, 0) + 1
        if counts.get(self.designated) != 3:
            raise ValueError("designated variable must occur exactly 3 times")
        heaviest = max(count for var, count in counts.items() if var != self.designated)
        if heaviest > 4:
            raise ValueError("non-designated gadget variables must occur at most 4 times")

    @property
    def var_count(self) -> int:
        return max(abs(lit) for pattern in self.clauses for lit in pattern)

    def negated(self) -> "GadgetTemplate":
        flipped = tuple(tuple(-lit for lit in pattern) for pattern in self.clauses)
        return GadgetTemplate(clauses=flipped, designated=self.designated, forces_true=not self.forces_true)


FORCE_TRUE_GADGET = GadgetTemplate(clauses=_GADGET_PATTERN, designated=3, forces_true=True)
FORCE_FALSE_GADGET = FORCE_TRUE_GADGET.negated()


def instantiate_gadget(template: GadgetTemplate, alloc: FreshAllocator) -> tuple[list[Clause], int]:
    """Emit the gadget over fresh variables, in template clause order.

    Template variables map to fresh indices in numbering order (which is
    first-appearance order in the emitted clause list).  Returns the 25
    clauses and the concrete designated variable.
    """
    mapping = {t: alloc.fresh() for t in range(1, template.var_count + 1)}
    clauses = [
        Clause(tuple((1 if lit > 0 else -1) * mapping[abs(lit)] for lit in pattern))
        for pattern in template.clauses
    ]
    return clauses, mapping[template.designated]


@dataclass(frozen=True)
class TraceStep:
    """One rewrite event: ``source`` is the replaced clause's position in
    the working formula just before the event, ``produced`` the positions
    of the emitted clauses just after it."""

    rule: str
    source: int | None
    produced: tuple[int, ...]
    fresh_vars: tuple[int, ...]


@dataclass(frozen=True)
class ClauseOrigin:
    """Final provenance of one output clause: the rule that created it
    ("input" for clauses carried over verbatim) and the index of the
    input clause it descends from."""

    rule: str
    source: int | None


@dataclass(frozen=True)
class ReductionTrace:
    """Event log of a transformation run plus per-output-clause provenance.

    ``steps`` is the ordered rewrite log; each step's indices refer to
    the working formula at the time of that event (a two-stage pipeline
    first rewrites mixed clauses, then rewrites the intermediate result's
    2-clauses).  ``provenance`` has one entry per output clause.  Fresh
    variable allocations are disjoint across steps and strictly
    increasing.
    """

    steps: tuple[TraceStep, ...]
    original_variable_ceiling: int
    provenance: tuple[ClauseOrigin, ...]


_Expansion = Callable[[Clause, FreshAllocator], tuple[list[Clause], list[str]]]


def _gold_pass(
    clauses: Iterable[Clause], alloc: FreshAllocator
) -> tuple[list[Clause], list[ClauseOrigin], list[TraceStep]]:
    out: list[Clause] = []
    origins: list[ClauseOrigin] = []
    steps: list[TraceStep] = []
    for index, clause in enumerate(clauses):
        if clause.is_mixed:
            first_fresh = alloc.next_index
            children = gold_step(clause, alloc)
            ordered = sorted(children, key=lambda c: c.width, reverse=True)
            position = len(out)
            out.extend(ordered)
            origins.extend(ClauseOrigin("gold", index) for _ in ordered)
            steps.append(
                TraceStep(
                    rule="gold",
                    source=index,
                    produced=tuple(range(position, position + len(ordered))),
                    fresh_vars=tuple(range(first_fresh, alloc.next_index)),
                )
            )
        else:
            out.append(clause)
            origins.append(ClauseOrigin("input", index))
    return out, origins, steps


def _two_clause_pass(
    clauses: list[Clause],
    origins: list[ClauseOrigin],
    alloc: FreshAllocator,
    expand: _Expansion,
    step_rule: str,
) -> tuple[list[Clause], list[ClauseOrigin], list[TraceStep]]:
    out: list[Clause] = []
    out_origins: list[ClauseOrigin] = []
    steps: list[TraceStep] = []
    for index, clause in enumerate(clauses):
        if clause.width == 2:
            first_fresh = alloc.next_index
            produced, labels = expand(clause, alloc)
            root = origins[index].source
            position = len(out)
            out.extend(produced)
            out_origins.extend(ClauseOrigin(label, root) for label in labels)
            steps.append(
                TraceStep(
                    rule=step_rule,
                    source=index,
                    produced=tuple(range(position, position + len(produced))),
                    fresh_vars=tuple(range(first_fresh, alloc.next_index)),
                )
            )
        else:
            out.append(clause)
            out_origins.append(origins[index])
    return out, out_origins, steps


def _pipeline_entry(
    formula: CnfFormula,
) -> tuple[list[Clause], list[ClauseOrigin], list[TraceStep], FreshAllocator]:
    """Validate a pipeline input and run the mixed-clause stage.

    Inputs that are already monotone (2,3)-SAT-4 (the mixed-elimination
    output class) are accepted as-is and skip straight to the 2-clause
    stage.
    """
    strict = check_profile(formula, PROFILES["3sat4"])
    alloc = FreshAllocator.for_formula(formula)
    if strict.ok:
        return (*_gold_pass(formula.clauses, alloc), alloc)
    relaxed = check_profile(formula, PROFILES["mono23sat4"])
    if relaxed.ok:
        origins = [ClauseOrigin("input", i) for i in range(len(formula.clauses))]
        return list(formula.clauses), origins, [], alloc
    raise ProfileError("input is neither 3-SAT-4 nor monotone (2,3)-SAT-4", strict)


def eliminate_mixed(formula: CnfFormula) -> tuple[CnfFormula, ReductionTrace]:
    """Rewrite every mixed clause of a 3-SAT-4 instance via gold_step.

    The output has no mixed clauses, every clause of width 2 or 3, and
    is equisatisfiable with the input (monotone (2,3)-SAT-4).  Children
    replace their parent in place, wider child first.
    """
    report = check_profile(formula, PROFILES["3sat4"])
    if not report.ok:
        raise ProfileError("eliminate_mixed requires a 3-SAT-4 instance", report)
    alloc = FreshAllocator.for_formula(formula)
    clauses, origins, steps = _gold_pass(formula.clauses, alloc)
    out = CnfFormula(clauses, num_vars=alloc.next_index - 1)
    trace = ReductionTrace(tuple(steps), formula.num_vars, tuple(origins))
    return out, trace


def to_monotone_3sat5(formula: CnfFormula, compact: bool = False) -> tuple[CnfFormula, ReductionTrace]:
    """Full pipeline to monotone 3-SAT-5: eliminate mixed clauses, then
    expand every 2-clause with apply_r3 (compact switches to the 17-clause
    variant).  Output is equisatisfiable, all clauses monotone 3-clauses,
    no variable occurring more than five times."""

    def expand(clause: Clause, alloc: FreshAllocator) -> tuple[list[Clause], list[str]]:
        produced = apply_r3(clause, alloc, compact=compact)
        return produced, ["r3"] * len(produced)

    mid_clauses, mid_origins, steps, alloc = _pipeline_entry(formula)
    out_clauses, origins, expand_steps = _two_clause_pass(mid_clauses, mid_origins, alloc, expand, "r3")
    out = CnfFormula(out_clauses, num_vars=alloc.next_index - 1)
    trace = ReductionTrace(tuple(steps + expand_steps), formula.num_vars, tuple(origins))
    return out, trace


def to_monotone_3sat4(formula: CnfFormula) -> tuple[CnfFormula, ReductionTrace]:
    """Full pipeline to monotone 3-SAT-4: eliminate mixed clauses, then
    widen every 2-clause with a fresh forced variable and attach one
    fresh gadget per 2-clause.

    A negative pair gains the negation of a variable its gadget forces
    true; a positive pair gains a variable its gadget forces false.  The
    designated variable ends at four occurrences (three in the gadget,
    one in the widened clause); everything else stays within four.
    """

    def expand(clause: Clause, alloc: FreshAllocator) -> tuple[list[Clause], list[str]]:
        template = FORCE_TRUE_GADGET if clause.is_negative else FORCE_FALSE_GADGET
        gadget_clauses, designated = instantiate_gadget(template, alloc)
        widen_lit = -designated if clause.is_negative else designated
        widened = Clause(clause.lits + (widen_lit,))
        return [widened] + gadget_clauses, ["widen"] + ["gadget"] * len(gadget_clauses)

    mid_clauses, mid_origins, steps, alloc = _pipeline_entry(formula)
    out_clauses, origins, expand_steps = _two_clause_pass(mid_clauses, mid_origins, alloc, expand, "gadget")
    out = CnfFormula(out_clauses, num_vars=alloc.next_index - 1)
    trace = ReductionTrace(tuple(steps + expand_steps), formula.num_vars, tuple(origins))
    return out, trace

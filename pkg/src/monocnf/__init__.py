"""CNF reduction toolkit: monotone 3-SAT rewrites with bounded variable
occurrences, plus exhaustive and DPLL satisfiability checking."""

from .bench import (
    CSV_HEADER,
    BlowupRecord,
    GenConfig,
    GenerationError,
    PipelineOutcome,
    SplitMix64,
    blowup_report,
    csv_rows,
    generate,
)
from .dimacs import DimacsDocument, DimacsError, dump, load, parse, serialize
from .formula import (
    Clause,
    ClauseKind,
    CnfFormula,
    FormulaError,
    OccurrenceTable,
    Polarity,
    PolaritySplit,
    classify_clause,
    occurrence_table,
    polarity_split,
    var_set,
)
from .profiles import PROFILES, Profile, Violation, ViolationReport, check_profile
from .reduce import (
    FORCE_FALSE_GADGET,
    FORCE_TRUE_GADGET,
    RULE_STATS,
    ClauseOrigin,
    FreshAllocator,
    GadgetTemplate,
    ProfileError,
    ReductionTrace,
    RuleStats,
    TraceStep,
    apply_r1,
    apply_r2,
    apply_r3,
    eliminate_mixed,
    gold_step,
    instantiate_gadget,
    to_monotone_3sat4,
    to_monotone_3sat5,
)
from .solve import (
    ForcingReport,
    SatVerdict,
    VariableLimitError,
    check_equisat,
    evaluate,
    restrict_model,
    solve_dpll,
    solve_exhaustive,
    verify_forcing,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupRecord",
    "CSV_HEADER",
    "Clause",
    "ClauseKind",
    "ClauseOrigin",
    "CnfFormula",
    "DimacsDocument",
    "DimacsError",
    "FORCE_FALSE_GADGET",
    "FORCE_TRUE_GADGET",
    "ForcingReport",
    "FormulaError",
    "FreshAllocator",
    "GadgetTemplate",
    "GenConfig",
    "GenerationError",
    "OccurrenceTable",
    "PROFILES",
    "PipelineOutcome",
    "Polarity",
    "PolaritySplit",
    "Profile",
    "ProfileError",
    "RULE_STATS",
    "ReductionTrace",
    "RuleStats",
    "SatVerdict",
    "SplitMix64",
    "TraceStep",
    "VariableLimitError",
    "Violation",
    "ViolationReport",
    "apply_r1",
    "apply_r2",
    "apply_r3",
    "blowup_report",
    "check_equisat",
    "check_profile",
    "classify_clause",
    "csv_rows",
    "dump",
    "eliminate_mixed",
    "evaluate",
    "generate",
    "gold_step",
    "instantiate_gadget",
    "load",
    "occurrence_table",
    "parse",
    "polarity_split",
    "restrict_model",
    "serialize",
    "solve_dpll",
    "solve_exhaustive",
    "to_monotone_3sat4",
    "to_monotone_3sat5",
    "var_set",
    "verify_forcing",
]

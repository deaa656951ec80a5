"""flcalc: two formulations of the Full Lambek sequent calculus as
executable rule systems, with proof checking, terminating cut-free
decision search, bounded with-cut search, and proof translations between
the systems."""

from .calculus import (
    CheckReport,
    ProofTree,
    RuleSchema,
    System,
    check_proof,
    instantiates,
    premise_candidates,
    rule_schemas,
)
from .corpus import (
    CorpusEntry,
    CorpusError,
    CorpusReport,
    DERIVABILITY_MATRIX,
    load_corpus,
    run_corpus,
)
from .formulas import (
    Atom,
    BOT,
    CoImp,
    CoNeg,
    Const,
    Formula,
    IDENTITY,
    Imp,
    Neg,
    ONE,
    Plus,
    SIGMA,
    Sequent,
    SymbolMap,
    Tensor,
    TOP,
    With,
    ZERO,
    apply_symbol_map,
    size,
    subformula_closure,
)
from .search import (
    CutBudget,
    Provable,
    ResourceExceeded,
    SearchOutcome,
    Unprovable,
    decide_cut_free,
    proof_height,
    search_with_cuts,
)
from .syntax import (
    SourceError,
    emit_latex,
    parse_formula,
    parse_proof,
    parse_sequent,
    print_formula,
    print_proof,
    print_sequent,
    proof_from_json,
    proof_to_json,
)
from .translate import (
    SIGMA_RULE_MAP,
    TranslationTrace,
    context_gadget,
    curry_context,
    embed_to_fl,
    sigma_rule_name,
    translate_to_fl_prime,
)

__all__ = [
    "Atom", "BOT", "CheckReport", "CoImp", "CoNeg", "Const", "CorpusEntry",
    "CorpusError", "CorpusReport", "CutBudget", "DERIVABILITY_MATRIX",
    "Formula", "IDENTITY", "Imp", "Neg", "ONE", "Plus", "ProofTree",
    "Provable", "ResourceExceeded", "RuleSchema", "SearchOutcome", "Sequent",
    "SIGMA", "SIGMA_RULE_MAP", "SourceError", "SymbolMap", "System",
    "Tensor", "TOP", "TranslationTrace", "Unprovable", "With", "ZERO",
    "apply_symbol_map", "check_proof", "context_gadget", "curry_context",
    "decide_cut_free", "embed_to_fl", "emit_latex", "instantiates",
    "load_corpus", "parse_formula", "parse_proof", "parse_sequent",
    "premise_candidates", "print_formula", "print_proof", "print_sequent",
    "proof_from_json", "proof_height", "proof_to_json", "rule_schemas",
    "run_corpus", "search_with_cuts", "sigma_rule_name", "size",
    "subformula_closure", "translate_to_fl_prime",
]

__version__ = "0.1.0"

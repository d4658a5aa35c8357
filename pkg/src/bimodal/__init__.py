"""Workbench for a bimodal logic of contingency and accident.

Submodules:

- :mod:`bimodal.syntax` — formula ASTs, grammar, printing, enumeration
- :mod:`bimodal.kripke` — frames, models, satisfaction, frame classes
- :mod:`bimodal.translate` — possibility-language translation, announcement
  reduction, bounded equivalence
- :mod:`bimodal.decide` — bounded countermodel search, definability,
  distinguishing formulas, the conjecture sweep
- :mod:`bimodal.proof` — Hilbert systems, proof checking, mutations
- :mod:`bimodal.corpus` — the bundled derivation corpus
- :mod:`bimodal.fixtures` — stock frames, models, and formulas
- :mod:`bimodal.suite` — the bundled demonstration suite
- :mod:`bimodal.cli` — command-line front end

The names below cover the everyday surface; anything more specialized
(column evaluators, reduction traces, schema matching) is imported from
its submodule directly.
"""

from bimodal.decide import (
    HOLDS_AT_BOUND,
    REFUTED,
    Report,
    conjecture_sweep,
    defines_property,
    distinguishing_formula,
    find_countermodel,
    sat_bounded,
    valid_bounded,
)
from bimodal.corpus import CorpusEntry, builtin_corpus, corpus_entry
from bimodal.kripke import (
    Frame,
    FrameClass,
    Model,
    PointedModel,
    enumerate_frames,
    evaluate,
    frame_from_json,
    frame_has_property,
    frame_to_json,
    frame_valid,
    mirror_reduction,
    model_from_json,
    model_to_json,
    reflexive_closure,
    reflexivize_dead_ends,
    restrict,
)
from bimodal.proof import (
    SYSTEMS,
    CheckResult,
    Proof,
    ProofLine,
    check_proof,
    proof_from_json,
    proof_to_json,
    single_line_mutations,
)
from bimodal.suite import run_suite
from bimodal.syntax import (
    Acc,
    Ann,
    AnnWhether,
    And,
    Atom,
    BOT,
    Bot,
    Box,
    Con,
    Diamond,
    Ess,
    Formula,
    Iff,
    Implies,
    LanguageTag,
    NonCon,
    Not,
    Or,
    ParseError,
    TOP,
    Top,
    atoms,
    desugar,
    enumerate_formulas,
    in_language,
    metrics,
    parse,
    render,
    substitute,
)
from bimodal.translate import (
    equivalent_bounded,
    reduce_announcements,
    to_diamond,
)

__all__ = [
    "Acc",
    "And",
    "Ann",
    "AnnWhether",
    "Atom",
    "BOT",
    "Bot",
    "Box",
    "CheckResult",
    "Con",
    "CorpusEntry",
    "Diamond",
    "Ess",
    "Formula",
    "Frame",
    "FrameClass",
    "HOLDS_AT_BOUND",
    "Iff",
    "Implies",
    "LanguageTag",
    "Model",
    "NonCon",
    "Not",
    "Or",
    "ParseError",
    "PointedModel",
    "Proof",
    "ProofLine",
    "REFUTED",
    "Report",
    "SYSTEMS",
    "TOP",
    "Top",
    "atoms",
    "builtin_corpus",
    "check_proof",
    "conjecture_sweep",
    "corpus_entry",
    "defines_property",
    "desugar",
    "distinguishing_formula",
    "enumerate_formulas",
    "enumerate_frames",
    "equivalent_bounded",
    "evaluate",
    "find_countermodel",
    "frame_from_json",
    "frame_has_property",
    "frame_to_json",
    "frame_valid",
    "in_language",
    "metrics",
    "mirror_reduction",
    "model_from_json",
    "model_to_json",
    "parse",
    "proof_from_json",
    "proof_to_json",
    "reduce_announcements",
    "reflexive_closure",
    "reflexivize_dead_ends",
    "render",
    "restrict",
    "run_suite",
    "sat_bounded",
    "single_line_mutations",
    "substitute",
    "to_diamond",
    "valid_bounded",
]

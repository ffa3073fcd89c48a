"""Classification of admissible-position sets by globalism, monism and syncretism."""

from .classify import Taxon, TaxonReport, classify, explain
from .conditions import (
    ConditionProfile,
    Witness,
    condition_profile,
    eval_G,
    eval_M,
    eval_syncretism,
    eval_weak_globalism,
    eval_weak_monism,
)
from .index import canonical_index, compare_positions, position_from_index
from .io import emit_report, parse_compact_spec, parse_model_document, serialize_model
from .model import Model, ModelError, Position, Space, answer_of, as_syncretic, build_model
from .reduction import QuestionPartition, coanswered_partition, merge_questions
from .sweep import SweepReport, enumerate_positions, for_each_nonempty_subset, maximal_model, verify_laws

__version__ = "0.1.0"

__all__ = [
    "ConditionProfile",
    "Model",
    "ModelError",
    "Position",
    "QuestionPartition",
    "Space",
    "SweepReport",
    "Taxon",
    "TaxonReport",
    "Witness",
    "answer_of",
    "as_syncretic",
    "build_model",
    "canonical_index",
    "classify",
    "coanswered_partition",
    "compare_positions",
    "condition_profile",
    "emit_report",
    "enumerate_positions",
    "eval_G",
    "eval_M",
    "eval_syncretism",
    "eval_weak_globalism",
    "eval_weak_monism",
    "explain",
    "for_each_nonempty_subset",
    "maximal_model",
    "merge_questions",
    "parse_compact_spec",
    "parse_model_document",
    "position_from_index",
    "serialize_model",
    "verify_laws",
]

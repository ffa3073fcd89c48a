"""Merging of questions that receive the same answer in every admissible position."""

from __future__ import annotations

from dataclasses import dataclass

from .model import Model, ModelError, Position, Space, trusted_model

CONJUNCTION = "∧"


@dataclass(frozen=True)
class QuestionPartition:
    classes: tuple
    merged_labels: tuple

    def representatives(self) -> tuple:
        return tuple(cls[0] for cls in self.classes)


def coanswered_partition(model: Model) -> QuestionPartition:
    """Group questions whose answer columns are identical across ``model``.

    Classes are tuples of 1-based question ordinals, ordered by their lowest
    member.
    """
    by_column = {}
    for y in range(model.space.n):
        column = tuple(p.assigns[y] for p in model.positions)
        by_column.setdefault(column, []).append(y + 1)
    classes = tuple(sorted((tuple(c) for c in by_column.values()), key=lambda c: c[0]))
    labels = model.space.question_labels
    merged = tuple(CONJUNCTION.join(labels[q - 1] for q in cls) for cls in classes)
    return QuestionPartition(classes, merged)


def merge_questions(model: Model) -> Model:
    """Replace every class of co-answered questions by their conjunction.

    The lowest-ordinal member of each class keeps its column.
    """
    if model.syncretic:
        raise ModelError("question merging is undefined for syncretic models")
    part = coanswered_partition(model)
    if len(part.classes) == model.space.n:
        return model
    keep = [q - 1 for q in part.representatives()]
    space = Space(len(keep), model.space.m, part.merged_labels, model.space.answer_labels)
    project = {p: Position(tuple(p[i] for i in keep)) for p in model.positions}
    # Projection is order-preserving: dropped columns copy a retained earlier one.
    merged = trusted_model(space, [project[p] for p in model.positions])
    if model.names:
        merged = Model(space, merged.positions, False, 0, {project[p]: nm for p, nm in model.names.items() if p in project})
    return merged

"""Questions, answers, positions and the admissible-position sets built from them.

Answers are referenced by 1-based ordinal into ``Space.answer_labels``; a
position assigns one answer ordinal per question, or, for syncretic models, a
non-empty frozenset of answer ordinals per question.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

Cell = Union[int, frozenset]


class ModelError(ValueError):
    """Raised when a space, position or model cannot be constructed."""


@dataclass(frozen=True)
class Space:
    """``n`` questions and ``m`` answers.

    Labels default to ``Q1..Qn`` and ``A1..Am``; explicit labels equal to the
    defaults are normalized away so both spellings compare equal.
    """

    n: int
    m: int
    questions: tuple = ()
    answers: tuple = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ModelError(f"question count must be >= 1, got {self.n!r}")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ModelError(f"answer count must be >= 1, got {self.m!r}")
        for kind, attr, prefix, count in (("question", "questions", "Q", self.n), ("answer", "answers", "A", self.m)):
            given = tuple(getattr(self, attr))
            if given:
                _check_labels(kind, given, count)
                if given == _default_labels(prefix, count):
                    given = ()
            object.__setattr__(self, attr, given)

    @property
    def question_labels(self) -> tuple:
        return self.questions or _default_labels("Q", self.n)

    @property
    def answer_labels(self) -> tuple:
        return self.answers or _default_labels("A", self.m)

    @property
    def universe_size(self) -> int:
        """Number of distinct (non-syncretic) positions, ``m ** n``."""
        return self.m ** self.n

    def shape(self) -> str:
        return f"{self.n}x{self.m}"

    def answer_ordinal(self, label: str) -> int:
        try:
            return self.answer_labels.index(label) + 1
        except ValueError:
            raise ModelError(f"unknown answer label {label!r}") from None


@functools.lru_cache(maxsize=32)
def _default_labels(prefix: str, count: int) -> tuple:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def _check_labels(kind: str, labels: tuple, count: int) -> None:
    if len(labels) != count:
        raise ModelError(f"expected {count} {kind} labels, got {len(labels)}")
    for lab in labels:
        if not isinstance(lab, str) or not lab:
            raise ModelError(f"{kind} labels must be non-empty strings, got {lab!r}")
    if len(set(labels)) != len(labels):
        raise ModelError(f"{kind} labels must be unique: {list(labels)}")


@dataclass(frozen=True)
class Position:
    """A total assignment of answers to questions.

    ``assigns[i]`` is the answer ordinal given to question ``i + 1``; in
    syncretic mode it is a frozenset of answer ordinals.
    """

    assigns: tuple

    def __post_init__(self):
        object.__setattr__(self, "assigns", tuple(self.assigns))

    def __len__(self):
        return len(self.assigns)

    def __iter__(self):
        return iter(self.assigns)

    def __getitem__(self, i):
        return self.assigns[i]

    @property
    def syncretic(self) -> bool:
        return any(isinstance(c, frozenset) for c in self.assigns)

    def wrapped(self) -> "Position":
        """The same position with every single answer wrapped as a singleton set."""
        return Position(tuple(c if isinstance(c, frozenset) else frozenset((c,)) for c in self.assigns))

    def sort_key(self) -> tuple:
        # Singletons sort as their element so wrapped positions keep the plain order.
        return tuple(tuple(sorted(c)) if isinstance(c, frozenset) else (c,) for c in self.assigns)


def validate_position(space: Space, p: Position, syncretic: bool = False) -> None:
    if len(p.assigns) != space.n:
        raise ModelError(f"position {_show(p)} has {len(p.assigns)} entries, expected {space.n}")
    for q, cell in enumerate(p.assigns, start=1):
        if syncretic:
            if not isinstance(cell, frozenset):
                raise ModelError(f"syncretic position {_show(p)}: Q{q} entry must be a set of answers")
            if not cell:
                raise ModelError(f"syncretic position {_show(p)}: empty answer set for Q{q}")
            members = cell
        else:
            if isinstance(cell, frozenset) or isinstance(cell, bool) or not isinstance(cell, int):
                raise ModelError(f"position {_show(p)}: Q{q} entry must be a single answer index")
            members = (cell,)
        for a in members:
            if isinstance(a, bool) or not isinstance(a, int) or not 1 <= a <= space.m:
                raise ModelError(f"position {_show(p)}: answer index {a!r} for Q{q} outside 1..{space.m}")


def _show(p: Position) -> str:
    return "(" + ",".join(str(sorted(c)) if isinstance(c, frozenset) else str(c) for c in p.assigns) + ")"


@dataclass(frozen=True)
class Model:
    """A space together with a non-empty set of distinct admissible positions.

    Positions are held deduplicated and in canonical order, so two models built
    from the same positions in different input order compare equal.
    """

    space: Space
    positions: tuple
    syncretic: bool = False
    duplicates_dropped: int = field(default=0, compare=False)
    names: Mapping = field(default_factory=dict, compare=False, hash=False)

    @property
    def k(self) -> int:
        return len(self.positions)

    def position_name(self, ordinal: int) -> str:
        """Display name for the position at 1-based ``ordinal``."""
        p = self.positions[ordinal - 1]
        if p in self.names:
            return self.names[p]
        if self.syncretic:
            return f"P#{ordinal}"
        from .index import canonical_index

        return f"P{canonical_index(self.space, p)}"

    def cell_label(self, cell: Cell) -> str:
        labels = self.space.answer_labels
        if isinstance(cell, frozenset):
            return "{" + ", ".join(labels[a - 1] for a in sorted(cell)) + "}"
        return labels[cell - 1]


def _coerce(p, syncretic: bool) -> Position:
    if not isinstance(p, Position):
        p = Position(tuple(p))
    if syncretic:
        p = Position(tuple(frozenset(c) if isinstance(c, (set, frozenset, list, tuple)) else c for c in p.assigns))
    return p


def build_model(
    space: Space,
    positions: Iterable,
    syncretic: bool = False,
    names: Mapping | None = None,
) -> Model:
    """Validate ``positions`` against ``space`` and return the admissible set.

    Positions may be given as :class:`Position` objects or plain sequences.
    Duplicates are dropped; the number dropped is kept on
    ``Model.duplicates_dropped``.
    """
    coerced = [_coerce(p, syncretic) for p in positions]
    if not coerced:
        raise ModelError("a model needs at least one position")
    for p in coerced:
        validate_position(space, p, syncretic)
    unique = sorted(set(coerced), key=Position.sort_key)
    named = {}
    if names:
        named = {_coerce(p, syncretic): nm for p, nm in names.items()}
    return Model(space, tuple(unique), syncretic, len(coerced) - len(unique), named)


def trusted_model(space: Space, positions: Sequence[Position]) -> Model:
    """Model from positions already known valid, distinct and in canonical order."""
    return Model(space, tuple(positions), False)


def answer_of(model: Model, position: int, question: int) -> Cell:
    """Answer (or answer set) that the ``position``-th member gives ``question``.

    Both arguments are 1-based ordinals.
    """
    if not 1 <= position <= model.k:
        raise ModelError(f"position ordinal {position} outside 1..{model.k}")
    if not 1 <= question <= model.space.n:
        raise ModelError(f"question ordinal {question} outside 1..{model.space.n}")
    return model.positions[position - 1].assigns[question - 1]


def as_syncretic(model: Model) -> Model:
    """Embed a plain model into syncretic mode by wrapping answers as singletons."""
    if model.syncretic:
        return model
    names = {p.wrapped(): nm for p, nm in model.names.items()}
    return Model(model.space, tuple(p.wrapped() for p in model.positions), True, 0, names)

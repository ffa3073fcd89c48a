"""Evaluation of the globalism, monism and syncretism conditions with witnesses.

Conditions compare cells by equality only; in syncretic models a cell is an
answer set and equality is set equality. Witnesses reference positions by
1-based ordinal in ``model.positions`` (canonical order) and questions by
1-based ordinal. Where several witnesses exist the least one under
(position, question) order is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .model import Model

# Witness kinds
POSITION_QUESTIONS = "position+questions"  # (~G): position x, questions y < z
QUESTION_POSITIONS = "question+positions"  # (~M): question y, positions w < x
SINGLE_POSITION = "single-position"  # (G'): a uniform position
SINGLE_QUESTION = "single-question"  # (M'): a constant question
POSITION_QUESTION = "position+question"  # (S): a multi-answer cell

CONDITIONS = ("g", "m", "weak_g", "weak_m", "s")


class ProfileError(AssertionError):
    """A profile violates one of the entailments between conditions."""


@dataclass(frozen=True)
class Witness:
    kind: str
    positions: tuple = ()
    questions: tuple = ()

    def replay(self, model: Model) -> bool:
        """Check the claim this witness certifies directly against ``model``."""
        try:
            rows = [model.positions[x - 1] for x in self.positions]
            if any(x < 1 for x in self.positions) or any(not 1 <= y <= model.space.n for y in self.questions):
                return False
        except IndexError:
            return False
        if self.kind == POSITION_QUESTIONS:
            (p,), (y, z) = rows, self.questions
            return p[y - 1] != p[z - 1]
        if self.kind == QUESTION_POSITIONS:
            (y,), (pw, px) = self.questions, rows
            return pw[y - 1] != px[y - 1]
        if self.kind == SINGLE_POSITION:
            (p,) = rows
            return len(set(p.assigns)) == 1
        if self.kind == SINGLE_QUESTION:
            (y,) = self.questions
            return len({p[y - 1] for p in model.positions}) == 1
        if self.kind == POSITION_QUESTION:
            (p,), (y,) = rows, self.questions
            cell = p[y - 1]
            return isinstance(cell, frozenset) and len(cell) > 1
        return False


class Verdict(NamedTuple):
    holds: bool
    witness: Optional[Witness] = None


def _rows(model: Model) -> list:
    return [p.assigns for p in model.positions]


def eval_G(model: Model) -> Verdict:
    """Globalism: every position gives all questions the same answer."""
    for x, p in enumerate(_rows(model), start=1):
        first = p[0]
        for z in range(1, len(p)):
            if p[z] != first:
                return Verdict(False, Witness(POSITION_QUESTIONS, (x,), (1, z + 1)))
    return Verdict(True)


def eval_M(model: Model) -> Verdict:
    """Monism: every question gets the same answer in every position."""
    rows = _rows(model)
    ref = rows[0]
    for y in range(model.space.n):
        for x in range(1, len(rows)):
            if rows[x][y] != ref[y]:
                return Verdict(False, Witness(QUESTION_POSITIONS, (1, x + 1), (y + 1,)))
    return Verdict(True)


def eval_weak_globalism(model: Model) -> Verdict:
    """Some position gives all questions the same answer."""
    for x, p in enumerate(_rows(model), start=1):
        if all(c == p[0] for c in p):
            return Verdict(True, Witness(SINGLE_POSITION, (x,)))
    return Verdict(False)


def eval_weak_monism(model: Model) -> Verdict:
    """Some question gets the same answer in every position."""
    rows = _rows(model)
    ref = rows[0]
    for y in range(model.space.n):
        if all(p[y] == ref[y] for p in rows):
            return Verdict(True, Witness(SINGLE_QUESTION, (), (y + 1,)))
    return Verdict(False)


def eval_syncretism(model: Model) -> Verdict:
    """Some position gives some question more than one answer jointly."""
    if not model.syncretic:
        return Verdict(False)
    for x, p in enumerate(_rows(model), start=1):
        for y, cell in enumerate(p, start=1):
            if isinstance(cell, frozenset) and len(cell) > 1:
                return Verdict(True, Witness(POSITION_QUESTION, (x,), (y,)))
    return Verdict(False)


def mixing_witnesses(model: Model) -> list:
    """One (~G) witness per non-uniform position, in position order."""
    out = []
    for x, p in enumerate(model.positions, start=1):
        for z in range(1, len(p)):
            if p[z] != p[0]:
                out.append(Witness(POSITION_QUESTIONS, (x,), (1, z + 1)))
                break
    return out


def varying_witnesses(model: Model) -> list:
    """One (~M) witness per non-constant question, in question order."""
    out = []
    ref = model.positions[0]
    for y in range(model.space.n):
        for x in range(1, model.k):
            if model.positions[x][y] != ref[y]:
                out.append(Witness(QUESTION_POSITIONS, (1, x + 1), (y + 1,)))
                break
    return out


@dataclass(frozen=True)
class ConditionProfile:
    g: bool
    m: bool
    weak_g: bool
    weak_m: bool
    s: bool
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.g and not self.weak_g:
            raise ProfileError("G holds but G' fails")
        if self.m and not self.weak_m:
            raise ProfileError("M holds but M' fails")
        if not self.g and self.m and self.weak_g:
            raise ProfileError("~G and M hold but G' holds")
        if self.g and not self.m and self.weak_m:
            raise ProfileError("G and ~M hold but M' holds")

    def values(self) -> dict:
        return {c: getattr(self, c) for c in CONDITIONS}


def condition_profile(model: Model) -> ConditionProfile:
    verdicts = {
        "g": eval_G(model),
        "m": eval_M(model),
        "weak_g": eval_weak_globalism(model),
        "weak_m": eval_weak_monism(model),
        "s": eval_syncretism(model),
    }
    witnesses = {c: v.witness for c, v in verdicts.items() if v.witness is not None}
    return ConditionProfile(*(verdicts[c].holds for c in CONDITIONS), witnesses=witnesses)

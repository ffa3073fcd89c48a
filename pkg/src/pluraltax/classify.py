"""Assignment of a taxon to a model from its condition profile."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .conditions import ConditionProfile, condition_profile, mixing_witnesses, varying_witnesses
from .model import Model


class Taxon(enum.Enum):
    GLOBAL_MONISM = "global_monism"
    GLOBAL_PLURALISM = "global_pluralism"
    LOCAL_MONISM = "local_monism"
    LOCAL_PLURALISM = "local_pluralism"

    @property
    def title(self) -> str:
        return self.value.replace("_", " ")


FLAGS = ("hybrid_pluralist", "hybrid_localist", "strict")


@dataclass(frozen=True)
class TaxonReport:
    primary: Taxon
    hybrid_pluralist: bool
    hybrid_localist: bool
    strict: bool
    syncretist: bool
    profile: ConditionProfile
    model: Model | None = None

    def __post_init__(self):
        if self.primary is not Taxon.LOCAL_PLURALISM and (self.hybrid_pluralist or self.hybrid_localist or self.strict):
            raise ValueError("hybrid/strict flags only apply to local pluralism")
        if self.primary is Taxon.LOCAL_PLURALISM and self.strict == (self.hybrid_pluralist or self.hybrid_localist):
            raise ValueError("local pluralism must be either strict or hybrid, not both or neither")

    @property
    def label(self) -> str:
        """Most specific name, e.g. ``"hybrid pluralism + hybrid localism"``."""
        if self.primary is not Taxon.LOCAL_PLURALISM:
            name = self.primary.title
        elif self.strict:
            name = "strict local pluralism"
        else:
            parts = []
            if self.hybrid_pluralist:
                parts.append("hybrid pluralism")
            if self.hybrid_localist:
                parts.append("hybrid localism")
            name = " + ".join(parts)
        if self.syncretist:
            name = "syncretist " + name
        return name


def taxon_from_profile(profile: ConditionProfile, model: Model | None = None) -> TaxonReport:
    if profile.g:
        primary = Taxon.GLOBAL_MONISM if profile.m else Taxon.GLOBAL_PLURALISM
    else:
        primary = Taxon.LOCAL_MONISM if profile.m else Taxon.LOCAL_PLURALISM
    local_plural = primary is Taxon.LOCAL_PLURALISM
    return TaxonReport(
        primary=primary,
        hybrid_pluralist=local_plural and profile.weak_m,
        hybrid_localist=local_plural and profile.weak_g,
        strict=local_plural and not profile.weak_m and not profile.weak_g,
        syncretist=profile.s,
        profile=profile,
        model=model,
    )


def classify(model: Model) -> TaxonReport:
    return taxon_from_profile(condition_profile(model), model)


def _yes(flag: bool) -> str:
    return "holds" if flag else "fails"


def _describe(model: Model, key: str, w) -> str:
    qlab = model.space.question_labels
    pos = model.positions
    if key == "g":
        x, (y, z) = w.positions[0], w.questions
        p = pos[x - 1]
        return (
            f"{model.position_name(x)} answers {qlab[y - 1]} with {model.cell_label(p[y - 1])}"
            f" but {qlab[z - 1]} with {model.cell_label(p[z - 1])}"
        )
    if key == "m":
        (w_, x), y = w.positions, w.questions[0]
        return (
            f"{qlab[y - 1]} is answered {model.cell_label(pos[w_ - 1][y - 1])} by {model.position_name(w_)}"
            f" but {model.cell_label(pos[x - 1][y - 1])} by {model.position_name(x)}"
        )
    if key == "weak_g":
        x = w.positions[0]
        return f"{model.position_name(x)} answers every question with {model.cell_label(pos[x - 1][0])}"
    if key == "weak_m":
        y = w.questions[0]
        return f"every position answers {qlab[y - 1]} with {model.cell_label(pos[0][y - 1])}"
    if key == "s":
        x, y = w.positions[0], w.questions[0]
        return f"{model.position_name(x)} answers {qlab[y - 1]} jointly with {model.cell_label(pos[x - 1][y - 1])}"
    raise KeyError(key)


def render_text(report: TaxonReport) -> str:
    model = report.model
    pr = report.profile
    lines = [f"taxon: {report.label}", f"primary: {report.primary.value}"]
    for flag in FLAGS + ("syncretist",):
        lines.append(f"{flag}: {str(getattr(report, flag)).lower()}")
    lines.append("conditions:")
    names = {"g": "G", "m": "M", "weak_g": "G'", "weak_m": "M'", "s": "S"}
    for key, shown in names.items():
        line = f"  ({shown}) {_yes(getattr(pr, key))}"
        w = pr.witnesses.get(key)
        if w is not None and model is not None:
            line += ": " + _describe(model, key, w)
        lines.append(line)
    if model is not None and report.strict:
        lines.append("every position mixes answers:")
        for w in mixing_witnesses(model):
            lines.append("  " + _describe(model, "g", w))
        lines.append("no question is constant:")
        for w in varying_witnesses(model):
            lines.append("  " + _describe(model, "m", w))
    return "\n".join(lines) + "\n"


def explain(model: Model) -> str:
    """Human-readable classification of ``model`` with witnesses spelled out."""
    return render_text(classify(model))

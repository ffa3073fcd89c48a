"""Model documents, compact model specs and report serialization.

A model document is JSON::

    {"questions": ["Q1", "Q2"], "answers": ["A1", "A2"],
     "positions": [["A1", "A2"], {"name": "P4", "answers": ["A2", "A2"]}],
     "syncretic": false}

In syncretic documents each cell is a list of answer labels. A compact spec is
``"<n>x<m>:{i,j,...}"``, listing positions by canonical index.
"""

from __future__ import annotations

import json
import logging
import re

from .classify import FLAGS, Taxon, TaxonReport, render_text
from .index import canonical_index, position_from_index
from .model import Model, ModelError, Space, build_model
from .sweep import SweepReport

log = logging.getLogger(__name__)

DOCUMENT_KEYS = ("questions", "answers", "positions", "syncretic")

_SHAPE = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")
_COMPACT = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*:\s*\{([^{}]*)\}\s*$")


class DocumentError(ModelError):
    """Malformed model document or compact spec."""


def parse_space(text: str) -> Space:
    """Parse ``"NxM"`` (N questions, M answers)."""
    mt = _SHAPE.match(text)
    if not mt:
        raise DocumentError(f"space must look like NxM, got {text!r}")
    return Space(int(mt.group(1)), int(mt.group(2)))


def _labels(doc: dict, key: str) -> tuple:
    if key not in doc:
        raise DocumentError(f"missing key {key!r}")
    val = doc[key]
    if not isinstance(val, list) or not val:
        raise DocumentError(f"{key}: expected a non-empty list of labels")
    for i, lab in enumerate(val):
        if not isinstance(lab, str) or not lab:
            raise DocumentError(f"{key}[{i}]: labels must be non-empty strings")
    if len(set(val)) != len(val):
        raise DocumentError(f"{key}: duplicate label")
    return tuple(val)


def _cell(space: Space, lab, where: str, syncretic: bool):
    if syncretic:
        if not isinstance(lab, list):
            raise DocumentError(f"{where}: syncretic cells must be lists of answer labels")
        if not lab:
            raise DocumentError(f"{where}: empty answer set")
        return frozenset(_cell(space, x, f"{where}[{i}]", False) for i, x in enumerate(lab))
    if not isinstance(lab, str) or lab not in space.answer_labels:
        raise DocumentError(f"{where}: unknown answer label {lab!r}")
    return space.answer_ordinal(lab)


def document_to_model(doc) -> Model:
    if not isinstance(doc, dict):
        raise DocumentError("top level must be a JSON object")
    unknown = set(doc) - set(DOCUMENT_KEYS)
    if unknown:
        raise DocumentError(f"unknown keys: {sorted(unknown)}")
    questions = _labels(doc, "questions")
    answers = _labels(doc, "answers")
    syncretic = doc.get("syncretic", False)
    if not isinstance(syncretic, bool):
        raise DocumentError("syncretic: expected true or false")
    space = Space(len(questions), len(answers), questions, answers)
    rows = doc.get("positions")
    if not isinstance(rows, list) or not rows:
        raise DocumentError("positions: expected a non-empty list")
    positions, names = [], {}
    for r, row in enumerate(rows):
        where = f"positions[{r}]"
        name = None
        if isinstance(row, dict):
            extra = set(row) - {"name", "answers"}
            if extra or "answers" not in row:
                raise DocumentError(f"{where}: position objects take 'answers' and optional 'name'")
            name = row.get("name")
            if name is not None and (not isinstance(name, str) or not name):
                raise DocumentError(f"{where}.name: expected a non-empty string")
            row = row["answers"]
            where += ".answers"
        if not isinstance(row, list):
            raise DocumentError(f"{where}: expected a list of answers")
        if len(row) != space.n:
            raise DocumentError(f"{where}: {len(row)} answers for {space.n} questions")
        pos = tuple(_cell(space, lab, f"{where}[{i}]", syncretic) for i, lab in enumerate(row))
        positions.append(pos)
        if name is not None:
            names[pos] = name
    model = build_model(space, positions, syncretic, names)
    if model.duplicates_dropped:
        log.warning("%d duplicate position(s) dropped", model.duplicates_dropped)
    return model


def parse_model_document(text) -> Model:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return document_to_model(doc)


def model_to_document(model: Model) -> dict:
    labels = model.space.answer_labels

    def cell(c):
        if isinstance(c, frozenset):
            return [labels[a - 1] for a in sorted(c)]
        return labels[c - 1]

    rows = []
    for p in model.positions:
        row = [cell(c) for c in p]
        rows.append({"name": model.names[p], "answers": row} if p in model.names else row)
    return {
        "questions": list(model.space.question_labels),
        "answers": list(labels),
        "positions": rows,
        "syncretic": model.syncretic,
    }


def serialize_model(model: Model) -> str:
    """Canonical document text: fixed key order, positions in canonical order."""
    return json.dumps(model_to_document(model), ensure_ascii=False, indent=2) + "\n"


def parse_compact_spec(text: str) -> Model:
    mt = _COMPACT.match(text)
    if not mt:
        raise DocumentError(f"compact spec must look like NxM:{{i,j,...}}, got {text!r}")
    space = Space(int(mt.group(1)), int(mt.group(2)))
    body = mt.group(3).strip()
    if not body:
        raise DocumentError("compact spec lists no positions")
    indices = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise DocumentError(f"bad index {tok!r} in compact spec")
        indices.append(int(tok))
    if len(set(indices)) != len(indices):
        raise DocumentError(f"duplicate index in compact spec {text!r}")
    return build_model(space, [position_from_index(space, i) for i in indices])


def _witness_json(model: Model | None, w) -> dict:
    out = {"kind": w.kind, "positions": list(w.positions), "questions": list(w.questions)}
    if model is not None:
        out["position_names"] = [model.position_name(x) for x in w.positions]
        out["question_labels"] = [model.space.question_labels[y - 1] for y in w.questions]
    return out


def taxon_report_json(report: TaxonReport) -> dict:
    pr = report.profile
    out = {
        "taxon": report.label,
        "primary": report.primary.value,
        **{f: getattr(report, f) for f in FLAGS},
        "syncretist": report.syncretist,
        "conditions": pr.values(),
        "witnesses": {k: _witness_json(report.model, w) for k, w in sorted(pr.witnesses.items())},
    }
    if report.model is not None:
        out["model"] = model_to_document(report.model)
    return out


def sweep_report_json(report: SweepReport) -> dict:
    return {
        "space": report.space.shape(),
        "models_checked": report.models_checked,
        "taxon_counts": {t.value: report.taxon_counts[t] for t in Taxon},
        "flag_counts": dict(report.flag_counts),
        "law_violations": list(report.law_violations),
        "elapsed_seconds": round(report.elapsed, 6),
    }


def sweep_report_text(report: SweepReport) -> str:
    lines = [f"space: {report.space.shape()}", f"models checked: {report.models_checked}"]
    for t in Taxon:
        lines.append(f"{t.value}: {report.taxon_counts[t]}")
    for f in FLAGS:
        lines.append(f"{f}: {report.flag_counts[f]}")
    lines.append(f"law violations: {len(report.law_violations)}")
    lines.extend("  " + v for v in report.law_violations)
    lines.append(f"elapsed: {report.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def emit_report(report, fmt: str = "text") -> bytes:
    """Serialize a :class:`TaxonReport` or :class:`SweepReport` as text or JSON."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, TaxonReport):
        if fmt == "text":
            return render_text(report).encode("utf-8")
        data = taxon_report_json(report)
    elif isinstance(report, SweepReport):
        if fmt == "text":
            return sweep_report_text(report).encode("utf-8")
        data = sweep_report_json(report)
    else:
        raise TypeError(f"cannot emit {type(report).__name__}")
    return (json.dumps(data, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def position_row(model_or_space, p) -> list:
    space = model_or_space.space if isinstance(model_or_space, Model) else model_or_space
    return [space.answer_labels[a - 1] for a in p]


def enumerate_json(space: Space, positions: list) -> list:
    return [{"index": canonical_index(space, p), "answers": position_row(space, p)} for p in positions]

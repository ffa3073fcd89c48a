import json
import logging

import pytest

from pluraltax import ModelError, Space, classify, emit_report, maximal_model, parse_compact_spec, parse_model_document, serialize_model, verify_laws
from pluraltax.io import DocumentError, parse_space


def doc(**kw):
    base = {"questions": ["Q1", "Q2", "Q3"], "answers": ["A1", "A2"], "positions": [["A1", "A1", "A1"]]}
    base.update(kw)
    return json.dumps(base)


def test_parse_global_pluralism_document():
    model = parse_model_document(doc(positions=[["A1", "A1", "A1"], ["A2", "A2", "A2"]]))
    assert model == parse_compact_spec("3x2:{1,8}")


def test_parse_trivial_document():
    model = parse_model_document(json.dumps({"questions": ["Q"], "answers": ["A"], "positions": [["A"]]}))
    assert model.space.n == model.space.m == model.k == 1


def test_duplicate_rows_warn(caplog):
    with caplog.at_level(logging.WARNING):
        model = parse_model_document(doc(positions=[["A1", "A1", "A2"], ["A1", "A1", "A2"]]))
    assert model.k == 1 and model.duplicates_dropped == 1
    assert "1 duplicate position" in caplog.text


def test_bytes_input():
    assert parse_model_document(doc().encode()).k == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"questions": ["Q1"],\n "answers": [}', "line 2"),
        (doc(positions=[["A1", "A1", "A3"]]), "positions[0][2]"),
        (doc(positions=[["A1", "A1"]]), "positions[0]"),
        (doc(positions=[]), "positions"),
        (doc(syncretic=True, positions=[[["A1"], [], ["A2"]]]), "positions[0][1]: empty answer set"),
        (doc(questions=["Q1", "Q1", "Q2"]), "questions"),
        (doc(extra=1), "unknown keys"),
        (doc(syncretic="yes"), "syncretic"),
        ("[]", "top level"),
        (b"\xff", "UTF-8"),
    ],
)
def test_document_errors_carry_context(text, fragment):
    with pytest.raises(DocumentError) as info:
        parse_model_document(text)
    assert fragment in str(info.value)


def test_missing_key():
    with pytest.raises(DocumentError, match="answers"):
        parse_model_document(json.dumps({"questions": ["Q"], "positions": [["A"]]}))


def test_syncretic_document():
    text = doc(syncretic=True, positions=[[["A2", "A1"], ["A1"], ["A2"]]])
    model = parse_model_document(text)
    assert model.syncretic
    assert model.positions[0].assigns[0] == frozenset({1, 2})
    out = json.loads(serialize_model(model))
    assert out["positions"] == [[["A1", "A2"], ["A1"], ["A2"]]]


def test_named_positions_round_trip():
    text = doc(positions=[{"name": "hawk", "answers": ["A2", "A2", "A2"]}, ["A1", "A1", "A1"]])
    model = parse_model_document(text)
    assert model.position_name(2) == "hawk"
    again = parse_model_document(serialize_model(model))
    assert again == model and again.position_name(2) == "hawk"


def test_serialize_is_canonical():
    a = parse_model_document(doc(positions=[["A2", "A2", "A2"], ["A1", "A2", "A1"]]))
    text = serialize_model(a)
    assert list(json.loads(text)) == ["questions", "answers", "positions", "syncretic"]
    b = parse_model_document(text)
    assert b == a and serialize_model(b) == text


def test_compact_examples():
    m = parse_compact_spec("3x2:{1,8}")
    assert [p.assigns for p in m.positions] == [(1, 1, 1), (2, 2, 2)]
    assert parse_compact_spec("1x1:{1}").k == 1
    m = parse_compact_spec("3x2:{2,7}")
    assert classify(m).strict


def test_compact_all_indices_is_maximal():
    assert parse_compact_spec("2x3:{" + ",".join(map(str, range(1, 10))) + "}") == maximal_model(Space(2, 3))
    assert parse_compact_spec(" 3 x 2 : { 8 , 1 } ") == parse_compact_spec("3x2:{1,8}")


@pytest.mark.parametrize("text", ["3x2", "3x2:{}", "3x2:{0}", "3x2:{9}", "3x2:{1,1}", "3x2:{a}", "0x2:{1}", "x2:{1}"])
def test_compact_errors(text):
    with pytest.raises(ModelError):
        parse_compact_spec(text)


def test_parse_space():
    assert parse_space("2x3") == Space(2, 3)
    with pytest.raises(DocumentError):
        parse_space("2by3")


def test_emit_global_monism_json():
    data = json.loads(emit_report(classify(parse_compact_spec("3x2:{1}")), "json"))
    assert data["primary"] == "global_monism"
    assert not any(data[f] for f in ("hybrid_pluralist", "hybrid_localist", "strict", "syncretist"))
    assert data["conditions"] == dict(g=True, m=True, weak_g=True, weak_m=True, s=False)


def test_emit_hybrid_json():
    data = json.loads(emit_report(classify(parse_compact_spec("3x2:{1,2}")), "json"))
    assert data["primary"] == "local_pluralism"
    assert data["hybrid_pluralist"] and data["hybrid_localist"] and not data["strict"]
    assert set(data["witnesses"]) == {"g", "m", "weak_g", "weak_m"}
    assert data["witnesses"]["g"] == {
        "kind": "position+questions", "positions": [2], "questions": [1, 3],
        "position_names": ["P2"], "question_labels": ["Q1", "Q3"],
    }


def test_emit_text_matches_explain():
    from pluraltax import explain

    m = parse_compact_spec("3x2:{2,7}")
    assert emit_report(classify(m), "text").decode() == explain(m)


def test_emit_sweep_text_trivial():
    text = emit_report(verify_laws(Space(1, 1)), "text").decode()
    assert "models checked: 1" in text
    assert "global_monism: 1" in text and "law violations: 0" in text


def test_emit_sweep_json():
    data = json.loads(emit_report(verify_laws(Space(3, 2)), "json"))
    assert data["taxon_counts"] == {"global_monism": 2, "global_pluralism": 1, "local_monism": 6, "local_pluralism": 246}
    assert data["law_violations"] == []


def test_emit_deterministic():
    r = classify(parse_compact_spec("3x2:{3,4,8}"))
    assert emit_report(r, "json") == emit_report(classify(parse_compact_spec("3x2:{8,4,3}")), "json")


def test_emit_rejects_unknown():
    with pytest.raises(ValueError):
        emit_report(classify(parse_compact_spec("1x1:{1}")), "xml")
    with pytest.raises(TypeError):
        emit_report(object(), "json")

import json

from hypothesis import given, settings, strategies as st

from pluraltax import (
    Space,
    as_syncretic,
    build_model,
    canonical_index,
    classify,
    condition_profile,
    merge_questions,
    parse_model_document,
    position_from_index,
    serialize_model,
)
from pluraltax.io import model_to_document
from oracles import quantified


@st.composite
def models(draw, max_n=4, max_m=4, max_k=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    row = st.tuples(*[st.integers(1, m)] * n)
    rows = draw(st.lists(row, min_size=1, max_size=max_k))
    return build_model(Space(n, m), rows)


@st.composite
def syncretic_models(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 3))
    cell = st.frozensets(st.integers(1, m), min_size=1)
    rows = draw(st.lists(st.tuples(*[cell] * n), min_size=1, max_size=6))
    return build_model(Space(n, m), rows, syncretic=True)


def summary(report):
    return (report.primary, report.hybrid_pluralist, report.hybrid_localist, report.strict, report.syncretist)


@settings(max_examples=400)
@given(models(), st.data())
def test_question_permutation_invariance(model, data):
    perm = data.draw(st.permutations(range(model.space.n)))
    labels = tuple(model.space.question_labels[i] for i in perm)
    permuted = build_model(
        Space(model.space.n, model.space.m, labels),
        [tuple(p.assigns[i] for i in perm) for p in model.positions],
    )
    assert condition_profile(permuted).values() == condition_profile(model).values()
    assert summary(classify(permuted)) == summary(classify(model))


@settings(max_examples=400)
@given(models(), st.data())
def test_answer_relabeling_invariance(model, data):
    perm = data.draw(st.permutations(range(1, model.space.m + 1)))
    relabeled = build_model(model.space, [tuple(perm[a - 1] for a in p.assigns) for p in model.positions])
    assert summary(classify(relabeled)) == summary(classify(model))


@settings(max_examples=300)
@given(models())
def test_document_round_trip(model):
    text = serialize_model(model)
    parsed = parse_model_document(text)
    assert parsed == model
    assert serialize_model(parse_model_document(serialize_model(parsed))) == text


@settings(max_examples=200)
@given(syncretic_models())
def test_syncretic_document_round_trip(model):
    parsed = parse_model_document(json.dumps(model_to_document(model)))
    assert parsed == model


@settings(max_examples=400)
@given(models())
def test_witnesses_replay(model):
    pr = condition_profile(model)
    for w in pr.witnesses.values():
        assert w.replay(model)
    assert set(pr.witnesses) == {c for c, v in pr.values().items() if v != (c in ("g", "m"))}


@settings(max_examples=300)
@given(syncretic_models())
def test_syncretic_witnesses_replay(model):
    pr = condition_profile(model)
    for w in pr.witnesses.values():
        assert w.replay(model)
    assert pr.s == any(len(c) > 1 for p in model.positions for c in p.assigns)


@settings(max_examples=300)
@given(models())
def test_profile_matches_quantifier_oracle(model):
    expected = quantified([p.assigns for p in model.positions], model.space.n)
    pr = condition_profile(model)
    assert {k: v for k, v in pr.values().items() if k != "s"} == expected
    assert pr.m == (model.k == 1)


@settings(max_examples=300)
@given(models())
def test_embedding_preserves_profile(model):
    assert condition_profile(as_syncretic(model)).values() == condition_profile(model).values()


@settings(max_examples=300)
@given(models())
def test_merge_sound(model):
    merged = merge_questions(model)
    assert merge_questions(merged) == merged
    assert summary(classify(merged)) == summary(classify(model))


@settings(max_examples=300)
@given(st.integers(1, 6), st.integers(1, 5), st.data())
def test_index_round_trip(n, m, data):
    s = Space(n, m)
    idx = data.draw(st.integers(1, s.universe_size))
    assert canonical_index(s, position_from_index(s, idx)) == idx


@settings(max_examples=200)
@given(models(), st.randoms())
def test_input_order_irrelevant(model, rnd):
    rows = [p.assigns for p in model.positions]
    rnd.shuffle(rows)
    assert build_model(model.space, rows) == model

import re
import string
from collections import Counter
from csv import reader

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.ModelOutputs import ModelOutputs
from QAHeadTool.Classes.QAPrediction import QAPrediction
from QAHeadTool.Functions import UsageError
from QAHeadTool.Functions.Eval.decode import best_span, decode
from QAHeadTool.Functions.Eval.evaluate import (
    TSV_HEADER,
    evaluate,
    score_sample,
    write_predictions_tsv,
)
from QAHeadTool.Functions.Eval.token_f1 import normalize_answer, token_f1
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.synthetic import generate_question_types, oracle_answer
from QAHeadTool.Functions.tokenizer import encode
from Tests.conftest import make_synthetic


@pytest.mark.parametrize(
    "predicted,gold,expected",
    [
        ("February 7, 2016", ["February 7"], 0.8),
        ("February 7", ["February 7"], 1.0),
        ("Denver Broncos", ["Carolina Panthers"], 0.0),
        ("", [""], 1.0),
        ("", ["Denver"], 0.0),
        ("the Denver Broncos!", ["Denver Broncos"], 1.0),
        ("Broncos", ["Carolina", "Denver Broncos"], pytest.approx(2 / 3)),
    ],
)
def test_token_f1(predicted, gold, expected):
    assert token_f1(predicted, gold) == expected


def test_normalize_answer():
    assert normalize_answer("  The  Super-Bowl, an event ") == "superbowl event"


def reference_normalize(text):
    """SQuAD evaluation script normalization, step by step"""
    text = text.lower()
    text = "".join(char for char in text if char not in set(string.punctuation))
    text = re.sub(r"\b(a|an|the)\b", " ", text)
    return " ".join(text.split())


def reference_f1(prediction, ground_truth):
    """SQuAD 2.0 script F1: an empty side scores 1 only against another empty side"""
    prediction_tokens = reference_normalize(prediction).split()
    ground_truth_tokens = reference_normalize(ground_truth).split()
    if len(prediction_tokens) == 0 or len(ground_truth_tokens) == 0:
        return int(prediction_tokens == ground_truth_tokens)
    common = Counter(prediction_tokens) & Counter(ground_truth_tokens)
    num_same = sum(common.values())
    if num_same == 0:
        return 0
    precision = 1.0 * num_same / len(prediction_tokens)
    recall = 1.0 * num_same / len(ground_truth_tokens)
    return (2 * precision * recall) / (precision + recall)


F1_TABLE = [
    ("Denver Broncos", ["Denver Broncos"]),
    ("the Denver Broncos", ["Denver Broncos", "Broncos"]),
    ("Broncos", ["Denver Broncos"]),
    ("Carolina Panthers", ["Denver Broncos"]),
    ("February 7, 2016", ["February 7, 2016", "February 7"]),
    ("7 February", ["February 7"]),
    ("Santa Clara, California", ["Santa Clara", "Levi's Stadium"]),
    ("Levis Stadium", ["Levi's Stadium"]),
    ("Levi 's Stadium", ["Levi's Stadium"]),
    ("an American football game", ["American football"]),
    ("a a a", ["a"]),
    ("gold gold coin", ["gold coin coin"]),
    ("", [""]),
    ("", ["Denver"]),
    ("Denver", [""]),
    ("the", [""]),
    ("!!!", ["..."]),
    ("Super Bowl 50", ["Super Bowl L", "50"]),
    ("Beyoncé", ["beyoncé"]),
    ("Peyton Manning and Cam Newton", ["Cam Newton", "Manning"]),
    ("second quarter", ["the second quarter of the game"]),
    ("1 2 3 4 5", ["5 4 3"]),
    ("Von Miller", ["Von-Miller"]),
    ("New York City", ["York"]),
]


@pytest.mark.parametrize("predicted,gold", F1_TABLE)
def test_token_f1_reference(predicted, gold):
    expected = max(reference_f1(predicted, text) for text in gold)
    assert token_f1(predicted, gold) == pytest.approx(expected, abs=1e-12)


WORDS = ["Denver", "broncos", "the", "a", "Super", "bowl", "50", "Panthers,", "!", "an"]
answer_texts = st.lists(st.sampled_from(WORDS), max_size=6).map(" ".join)


@given(answer_texts, answer_texts)
@settings(max_examples=200, deadline=None)
def test_token_f1_symmetric_bounded(first, second):
    f1 = token_f1(first, [second])
    assert f1 == token_f1(second, [first])
    assert 0.0 <= f1 <= 1.0


def brute_force_span(f_s, f_e, context_start, context_end, max_answer_len):
    """Exhaustive scan of the feasible (start, end) pairs"""
    best = None
    for start in range(context_start, context_end):
        for end in range(start, min(context_end, start + max_answer_len)):
            score = f_s[start] * f_e[end]
            if best is None or score > best[2]:
                best = (start, end, score)
    return best


def test_best_span_brute_force():
    rng = make_rng(11)
    for _ in range(100):
        n_tokens = int(rng.integers(4, 40))
        context_start = int(rng.integers(1, n_tokens - 1))
        f_s = np.zeros(n_tokens)
        f_e = np.zeros(n_tokens)
        f_s[context_start:] = rng.dirichlet(np.ones(n_tokens - context_start))
        f_e[context_start:] = rng.dirichlet(np.ones(n_tokens - context_start))
        max_answer_len = int(rng.integers(1, 8))
        expected = brute_force_span(f_s, f_e, context_start, n_tokens, max_answer_len)
        start, end, score = best_span(f_s, f_e, context_start, n_tokens, max_answer_len)
        assert (start, end) == expected[:2]
        assert score == pytest.approx(expected[2])


def test_best_span_respects_order():
    f_s = np.zeros(10)
    f_e = np.zeros(10)
    f_s[7], f_s[5] = 0.6, 0.4
    f_e[5], f_e[3] = 0.6, 0.4
    start, end, score = best_span(f_s, f_e, 0, 10)
    assert (start, end) == (5, 5)
    assert score == pytest.approx(0.24)
    assert (start, end) == brute_force_span(f_s, f_e, 0, 10, 30)[:2]


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 30))
def test_best_span_is_feasible(seed, max_answer_len):
    rng = make_rng(seed)
    f_s, f_e = rng.random(24), rng.random(24)
    start, end, _ = best_span(f_s, f_e, 6, 20, max_answer_len)
    assert 6 <= start <= end < 20
    assert end - start + 1 <= max_answer_len


def test_decode():
    sample = encode("A?", "xyabz", 16)
    span = np.zeros(len(sample))
    span[6] = 1.0
    f_e = np.zeros(len(sample))
    f_e[7] = 1.0
    categories = ["No", "Yes", "NoAnswer", "Span"]
    outputs = ModelOutputs(
        f_a=[0.1, 0.1, 0.3, 0.5], f_s=span, f_e=f_e, categories=categories,
        context_start=4, context_end=9,
    )
    prediction = decode(outputs, sample)
    assert (prediction.category, prediction.token_start, prediction.token_end) == ("Span", 6, 7)
    assert prediction.text == "ab"
    # Ties go to the lowest category index
    outputs.f_a = [0.4, 0.4, 0.1, 0.1]
    assert decode(outputs, sample).category == "No"


def test_decode_without_context():
    sample = encode("A?", "xyabz", 16)
    outputs = ModelOutputs(
        f_a=[0.1, 0.9], f_s=np.zeros(9), f_e=np.zeros(9), categories=["NoAnswer", "Span"],
        context_start=4, context_end=4,
    )
    prediction = decode(outputs, sample)
    assert prediction.category == "NoAnswer"
    assert prediction.is_fallback


def test_oracle_scores():
    dataset = make_synthetic("A", n_samples=40)
    scores = list()
    for sample in dataset:
        label = oracle_answer(sample)
        prediction = QAPrediction(
            category=label.kind,
            token_start=label.token_start,
            token_end=label.token_end,
            text=sample.get_span_text(label.token_start, label.token_end)
            if label.is_span
            else "",
        )
        scores.append(score_sample(prediction, sample))
    assert np.mean(scores) == 1.0


def test_constant_predictor():
    dataset = make_synthetic("B", n_samples=200)
    scores = [score_sample(QAPrediction(category="Yes"), sample) for sample in dataset]
    assert np.mean(scores) == pytest.approx(0.5, abs=0.05)


def test_score_sample_cross_task():
    boolean = make_synthetic("B", n_samples=2)[0]
    assert score_sample(QAPrediction(category="NoAnswer"), boolean) == 0.0
    extractive = make_synthetic("A", n_samples=4, answerable_fraction=1.0)[0]
    assert score_sample(QAPrediction(category="Yes"), extractive) == 0.0
    assert score_sample(QAPrediction(category="NoAnswer"), extractive) == 0.0


def test_evaluate(tiny_params, dataset_a, dataset_b):
    metrics = evaluate(tiny_params, dataset_a)
    assert metrics.accuracy is None
    assert 0.0 <= metrics.f1 <= 1.0
    assert metrics.n == len(dataset_a)
    mixed = dataset_a.mix_and_shuffle(dataset_b, make_rng(0))
    metrics = evaluate(tiny_params, mixed)
    assert metrics.accuracy is not None and metrics.f1 is not None
    assert sum(sum(row.values()) for row in metrics.confusion.values()) == len(mixed)


def test_evaluate_order_free(tiny_params, dataset_a, dataset_b):
    mixed = dataset_a.mix_and_shuffle(dataset_b, make_rng(0))
    other = dataset_a.mix_and_shuffle(dataset_b, make_rng(1))
    mask = HeadMask.leave_one_out(2, 2, 0, 1)
    assert evaluate(tiny_params, mixed, mask) == evaluate(tiny_params, other, mask)


def test_evaluate_errors(tiny_params):
    with pytest.raises(UsageError):
        evaluate(tiny_params, generate_question_types(4, seed=0))


def test_write_predictions_tsv(tmp_path, tiny_params, dataset_b):
    _, rows = evaluate(tiny_params, dataset_b, return_rows=True)
    file_path = write_predictions_tsv(rows, str(tmp_path / "out" / "predictions.tsv"))
    with open(file_path, newline="", encoding="utf-8") as tsv_file:
        lines = list(reader(tsv_file, delimiter="\t"))
    assert lines[0] == TSV_HEADER
    assert len(lines) == len(dataset_b) + 1
    assert [line[0] for line in lines[1:]] == [sample.sample_id for sample in dataset_b]

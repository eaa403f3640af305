import numpy as np
import pytest

from QAHeadTool.Classes._check import CheckMinError
from QAHeadTool.Classes.SyntheticSpec import SyntheticSpec
from QAHeadTool.Functions import SpecError
from QAHeadTool.Functions.synthetic import (
    generate_question_types,
    generate_synthetic,
    oracle_answer,
)


def test_task_a_all_answerable():
    spec = SyntheticSpec(n_samples=100, answerable_fraction=1.0, seed=4)
    dataset = generate_synthetic(spec, "A")
    assert dataset.provenance == "synthetic-A"
    for sample in dataset:
        assert sample.task == "extractive"
        assert sample.label.kind == "Span"
        assert sample.label.token_end - sample.label.token_start + 1 == spec.answer_len
        assert sample.get_span_text() == sample.gold_texts[0]
        assert oracle_answer(sample, spec.answer_len) == sample.label
        sample.check(spec.max_seq_len)


def test_task_a_no_answer():
    spec = SyntheticSpec(n_samples=50, answerable_fraction=0.0, seed=4)
    dataset = generate_synthetic(spec, "A")
    assert all(sample.label.kind == "NoAnswer" for sample in dataset)
    assert all(oracle_answer(sample).kind == "NoAnswer" for sample in dataset)


def test_task_b_balanced():
    spec = SyntheticSpec(n_samples=1000, seed=9)
    dataset = generate_synthetic(spec, "B")
    n_yes = sum(sample.label.kind == "Yes" for sample in dataset)
    assert abs(n_yes / 1000 - 0.5) <= 0.05
    for sample in dataset:
        assert sample.task == "boolean"
        assert oracle_answer(sample) == sample.label


@pytest.mark.parametrize("task", ["A", "B"])
def test_synthetic_deterministic(task):
    spec = SyntheticSpec(n_samples=20, seed=17)
    first = generate_synthetic(spec, task)
    second = generate_synthetic(spec, task)
    for sample_1, sample_2 in zip(first, second):
        assert np.array_equal(sample_1.token_ids, sample_2.token_ids)
        assert sample_1.label == sample_2.label
    other = generate_synthetic(SyntheticSpec(n_samples=20, seed=18), task)
    assert any(
        not np.array_equal(sample_1.token_ids, sample_2.token_ids)
        for sample_1, sample_2 in zip(first, other)
    )


def test_spec_errors():
    with pytest.raises(CheckMinError):
        SyntheticSpec(context_len=4)
    # 5 answer bytes, 1 marker and 3 distractors do not fit in 8 bytes
    with pytest.raises(SpecError, match="9 bytes needed"):
        generate_synthetic(SyntheticSpec(context_len=8, answer_len=5, n_distractors=3), "A")
    with pytest.raises(SpecError):
        generate_synthetic(SyntheticSpec(filler="ab1"), "B")
    with pytest.raises(SpecError):
        generate_synthetic(SyntheticSpec(context_len=90, max_seq_len=96), "A")
    with pytest.raises(SpecError):
        generate_synthetic(SyntheticSpec(), "C")


def test_question_types():
    dataset = generate_question_types(40, seed=2)
    kinds = [sample.label.kind for sample in dataset]
    assert kinds.count("Boolean") == kinds.count("Extractive") == 20
    for sample in dataset:
        sample.check(64)
        is_boolean = sample.question.split()[0].lower() in [
            "is", "does", "can", "was", "are", "did", "has", "will", "do", "could"
        ]
        assert is_boolean == (sample.label.kind == "Boolean")

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from QAHeadTool.Functions import (
    EmptyQuestionError,
    QuestionTooLongError,
    SchemaError,
    SpanTruncatedError,
)
from QAHeadTool.Functions.tokenizer import (
    CLS_ID,
    SEP_ID,
    align_char_span,
    encode,
    encode_question,
    preprocess_question,
)


def test_encode():
    sample = encode("A?", "bc", 16)
    assert sample.token_ids.tolist() == [256, 65, 63, 257, 98, 99]
    assert sample.context_start == 4
    assert sample.context_end == 6


def test_encode_truncates_context_tail():
    sample = encode("A?", "abcdefghij", 8)
    assert len(sample) == 8
    assert sample.get_span_text(sample.context_start, sample.context_end - 1) == "abcd"


def test_encode_question_too_long():
    with pytest.raises(QuestionTooLongError):
        encode("0123456789", "context", 8)


def test_encode_question_only():
    sample = encode_question("Is it?", 16)
    assert sample.token_ids[0] == CLS_ID and sample.token_ids[-1] == SEP_ID
    assert sample.context_start == sample.context_end == len(sample)
    sample.check(16)


@pytest.mark.parametrize(
    "question,expected",
    [
        (
            "does France have a Prime Minister and a President",
            "Does France have a Prime Minister and a President?",
        ),
        ("  what is it?  ", "What is it?"),
        ("1 thing", "1 Thing?"),
    ],
)
def test_preprocess_question(question, expected):
    assert preprocess_question(question) == expected


def test_preprocess_empty_question():
    with pytest.raises(EmptyQuestionError):
        preprocess_question("   ")


@settings(max_examples=100, deadline=None)
@given(
    st.text(
        alphabet=st.characters(min_codepoint=32, max_codepoint=126), min_size=1
    ).filter(lambda text: text.strip() != "")
)
def test_preprocess_idempotent(question):
    once = preprocess_question(question)
    assert preprocess_question(once) == once
    assert once.endswith("?")


def test_align_char_span():
    sample = encode("A?", "xyabz", 16)
    assert align_char_span(sample, 2, "ab") == (6, 7)
    assert sample.get_span_text(6, 7) == "ab"


def test_align_whole_context():
    sample = encode("A?", "xyabz", 16)
    assert align_char_span(sample, 0, "xyabz") == (
        sample.context_start,
        sample.context_end - 1,
    )


def test_align_multibyte():
    sample = encode("A?", "café au lait", 32)
    token_start, token_end = align_char_span(sample, 0, "café")
    assert token_end - token_start + 1 == 5
    assert sample.get_span_text(token_start, token_end) == "café"
    assert align_char_span(sample, 5, "au") == (token_end + 2, token_end + 3)


def test_align_truncated():
    sample = encode("A?", "xyabz", 7)
    with pytest.raises(SpanTruncatedError):
        align_char_span(sample, 2, "ab")


def test_align_mismatch():
    sample = encode("A?", "xyabz", 16)
    with pytest.raises(SchemaError):
        align_char_span(sample, 1, "ab")
    with pytest.raises(SchemaError):
        align_char_span(sample, 4, "zz")


def test_encode_is_byte_exact():
    sample = encode("Q?", "naïve", 32)
    context_ids = sample.token_ids[sample.context_start : sample.context_end]
    assert np.array_equal(context_ids, np.frombuffer("naïve".encode("utf-8"), dtype=np.uint8))

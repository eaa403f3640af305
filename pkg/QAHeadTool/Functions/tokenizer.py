"""Byte-level vocabulary: ids 0-255 are the byte values, then CLS, SEP and PAD"""
import numpy as np

from QAHeadTool.Functions import (
    EmptyQuestionError,
    QuestionTooLongError,
    SchemaError,
    SpanTruncatedError,
)

CLS_ID = 256
SEP_ID = 257
PAD_ID = 258
VOCAB_SIZE = 259


def preprocess_question(question):
    """Trim, upper-case the first letter and end the question with "?"

    Parameters
    ----------
    question : str
        raw question

    Returns
    -------
    question : str
        normalized question (idempotent)
    """
    question = question.strip()
    if question == "":
        raise EmptyQuestionError("Question is empty after trimming whitespace")
    for index, char in enumerate(question):
        if char.isalpha():
            question = question[:index] + char.upper() + question[index + 1 :]
            break
    if not question.endswith("?"):
        question += "?"
    return question


def encode(question, context, max_seq_len):
    """Build the [CLS] question [SEP] context sequence

    The context is truncated from the tail so that the sequence fits in
    max_seq_len tokens; the question is never truncated.

    Parameters
    ----------
    question : str
        preprocessed question
    context : str
        passage
    max_seq_len : int
        encoding window

    Returns
    -------
    sample : EncodedSample
        sample without label nor task
    """
    from QAHeadTool.Classes.EncodedSample import EncodedSample

    if question == "" or context == "":
        raise EmptyQuestionError("encode needs a non empty question and context")
    q_bytes = question.encode("utf-8")
    n_prefix = len(q_bytes) + 2
    if n_prefix >= max_seq_len:
        raise QuestionTooLongError(
            "Question of "
            + str(len(q_bytes))
            + " bytes does not fit in "
            + str(max_seq_len)
            + " tokens"
        )
    c_bytes = context.encode("utf-8")[: max_seq_len - n_prefix]
    token_ids = np.concatenate(
        [
            [CLS_ID],
            np.frombuffer(q_bytes, dtype=np.uint8),
            [SEP_ID],
            np.frombuffer(c_bytes, dtype=np.uint8),
        ]
    ).astype(np.int64)
    context_start = n_prefix
    context_end = n_prefix + len(c_bytes)

    # Byte offset of every character, -1 once the character starts past the window
    char_lens = np.array([len(char.encode("utf-8")) for char in context], dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(char_lens)[:-1]]) if len(context) else char_lens
    char_to_token = np.where(offsets < len(c_bytes), offsets + context_start, -1)
    return EncodedSample(
        token_ids=token_ids,
        context_start=context_start,
        context_end=context_end,
        question=question,
        context=context,
        char_to_token=char_to_token,
    )


def encode_question(question, max_seq_len):
    """Build the [CLS] question [SEP] sequence of the question type discriminator

    The context region is empty (context_start == context_end == length).
    """
    from QAHeadTool.Classes.EncodedSample import EncodedSample

    q_bytes = question.encode("utf-8")
    if len(q_bytes) + 2 > max_seq_len:
        raise QuestionTooLongError(
            "Question of " + str(len(q_bytes)) + " bytes does not fit in " + str(max_seq_len)
        )
    token_ids = np.concatenate(
        [[CLS_ID], np.frombuffer(q_bytes, dtype=np.uint8), [SEP_ID]]
    ).astype(np.int64)
    return EncodedSample(
        token_ids=token_ids,
        context_start=token_ids.size,
        context_end=token_ids.size,
        question=question,
        task="question_type",
    )


def align_char_span(sample, char_start, answer_text):
    """Token range of a character-offset answer inside an EncodedSample

    Parameters
    ----------
    sample : EncodedSample
        encoded sample (holds the original context and char_to_token)
    char_start : int
        character offset of the answer in the original context
    answer_text : str
        answer as listed in the data file

    Returns
    -------
    token_start : int
        token of the first answer byte
    token_end : int
        token of the last answer byte (inclusive)
    """
    char_end = char_start + len(answer_text)
    if answer_text == "" or char_start < 0 or char_end > len(sample.context):
        raise SchemaError(
            "Answer at char "
            + str(char_start)
            + " of length "
            + str(len(answer_text))
            + " is outside a context of "
            + str(len(sample.context))
            + " characters"
        )
    if sample.context[char_start:char_end] != answer_text:
        raise SchemaError(
            "Answer "
            + repr(answer_text)
            + " does not match the context at char "
            + str(char_start)
        )
    first = int(sample.char_to_token[char_start])
    last = int(sample.char_to_token[char_end - 1])
    token_end = last + len(answer_text[-1].encode("utf-8")) - 1
    if first < 0 or last < 0 or token_end >= sample.context_end:
        raise SpanTruncatedError(
            "Answer " + repr(answer_text) + " is truncated out of the encoding window"
        )
    return first, token_end


def decode_tokens(token_ids):
    """Text of the byte tokens of a sequence (special tokens skipped)"""
    data = bytes(int(token) for token in token_ids if 0 <= token < 256)
    return data.decode("utf-8", errors="replace")

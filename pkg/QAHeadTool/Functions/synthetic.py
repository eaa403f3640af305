"""Synthetic datasets solvable perfectly from their input

Task A (needle span): the question names a marker letter, the answer is the
answer_len bytes following that marker in the context (NoAnswer when the
marker is absent). Task B (containment): the question asks whether a digit
occurs in the context, Yes and No are balanced.
"""
from logging import getLogger

import numpy as np

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Functions import SpecError
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.tokenizer import (
    align_char_span,
    encode,
    encode_question,
    preprocess_question,
)

MARKERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
DIGITS = "0123456789"

# Template of each task, {} is the marker / digit
QUESTION_A = "what follows {}"
QUESTION_B = "is there a {}"

TASK_STREAMS = {"A": 1, "B": 2, "Q": 3}

BOOLEAN_STARTS = ["is", "does", "can", "was", "are", "did", "has", "will", "do", "could"]
WH_STARTS = ["what", "when", "who", "where", "which", "how", "why", "whose"]
SUBJECTS = [
    "the river",
    "france",
    "the oil crisis",
    "a prime minister",
    "the super bowl",
    "the company",
    "this song",
    "the treaty",
    "the team",
    "the museum",
]
PREDICATES = [
    "have a president",
    "begin in winter",
    "win the title",
    "belong to the city",
    "end after the war",
    "play in the final",
    "appear in the film",
    "sell more copies",
]

logger = getLogger(__name__)


def _check_spec(spec, task):
    """Raise a SpecError when the needle or the question cannot be embedded"""
    if set(spec.filler) & set(MARKERS + DIGITS) or spec.filler == "":
        raise SpecError("filler must be non empty and free of markers and digits")
    if task == "A":
        needed = spec.answer_len + 1 + spec.n_distractors
        question = preprocess_question(QUESTION_A.format("A"))
        if spec.n_distractors > len(MARKERS) - 1:
            raise SpecError("Too many distractor markers: " + str(spec.n_distractors))
    else:
        needed = 1 + spec.n_distractors
        question = preprocess_question(QUESTION_B.format("0"))
        if spec.n_distractors > len(DIGITS) - 1:
            raise SpecError("Too many distractor digits: " + str(spec.n_distractors))
    if spec.context_len < needed:
        raise SpecError(
            "context_len "
            + str(spec.context_len)
            + " too small to embed the needle ("
            + str(needed)
            + " bytes needed)"
        )
    if len(question.encode("utf-8")) + 2 + spec.context_len > spec.max_seq_len:
        raise SpecError(
            "Question and context of "
            + str(spec.context_len)
            + " bytes do not fit in "
            + str(spec.max_seq_len)
            + " tokens"
        )


def _filler(spec, rng):
    return [spec.filler[index] for index in rng.integers(len(spec.filler), size=spec.context_len)]


def _needle_sample(spec, rng, index):
    """One Task A sample"""
    marker_index = int(rng.integers(len(MARKERS)))
    marker = MARKERS[marker_index]
    others = [char for char in MARKERS if char != marker]
    distractors = [others[i] for i in rng.choice(len(others), spec.n_distractors, replace=False)]
    context = _filler(spec, rng)
    is_answerable = bool(rng.random() < spec.answerable_fraction)
    free = list(range(spec.context_len))
    if is_answerable:
        start = int(rng.integers(spec.context_len - spec.answer_len))
        context[start] = marker
        free = [pos for pos in free if not start <= pos <= start + spec.answer_len]
    for pos, char in zip(rng.choice(free, len(distractors), replace=False), distractors):
        context[int(pos)] = char
    context = "".join(context)
    sample = encode(preprocess_question(QUESTION_A.format(marker)), context, spec.max_seq_len)
    sample.task = "extractive"
    sample.sample_id = "A-" + str(index)
    if is_answerable:
        answer = context[start + 1 : start + 1 + spec.answer_len]
        token_start, token_end = align_char_span(sample, start + 1, answer)
        sample.label = AnswerLabel("Span", token_start, token_end)
        sample.gold_texts = [answer]
    else:
        sample.label = AnswerLabel("NoAnswer")
    return sample


def _containment_sample(spec, rng, index, is_yes):
    """One Task B sample"""
    digit = DIGITS[int(rng.integers(len(DIGITS)))]
    others = [char for char in DIGITS if char != digit]
    planted = [others[i] for i in rng.choice(len(others), spec.n_distractors, replace=False)]
    if is_yes:
        planted.append(digit)
    context = _filler(spec, rng)
    for pos, char in zip(rng.choice(spec.context_len, len(planted), replace=False), planted):
        context[int(pos)] = char
    sample = encode(
        preprocess_question(QUESTION_B.format(digit)), "".join(context), spec.max_seq_len
    )
    sample.task = "boolean"
    sample.sample_id = "B-" + str(index)
    sample.label = AnswerLabel("Yes" if is_yes else "No")
    return sample


def generate_synthetic(spec, task, split="train"):
    """Generate a synthetic dataset

    Parameters
    ----------
    spec : SyntheticSpec
        size, context length, filler, answerable fraction and seed
    task : str
        "A" (needle span, extractive) or "B" (containment, boolean)
    split : str
        split tag of the dataset

    Returns
    -------
    dataset : Dataset
        provenance synthetic-A or synthetic-B
    """
    if task not in ["A", "B"]:
        raise SpecError('Synthetic task must be "A" or "B", ' + repr(task) + " given")
    _check_spec(spec, task)
    rng = make_rng(spec.seed, stream=(TASK_STREAMS[task],))
    if task == "A":
        samples = [_needle_sample(spec, rng, index) for index in range(spec.n_samples)]
    else:
        is_yes = rng.permutation(np.arange(spec.n_samples) % 2 == 0)
        samples = [
            _containment_sample(spec, rng, index, bool(is_yes[index]))
            for index in range(spec.n_samples)
        ]
    dataset = Dataset(samples=samples, split=split, provenance="synthetic-" + task)
    logger.debug("generated %s", dataset)
    return dataset


def oracle_answer(sample, answer_len=3):
    """Label an oracle reads off a synthetic Task A or Task B sample

    Parameters
    ----------
    sample : EncodedSample
        synthetic sample (question built from QUESTION_A or QUESTION_B)
    answer_len : int
        answer length of the SyntheticSpec (Task A)

    Returns
    -------
    label : AnswerLabel
        the exact gold label
    """
    symbol = sample.question[-2]
    window = sample.token_ids[sample.context_start : sample.context_end]
    hits = np.flatnonzero(window == ord(symbol))
    if sample.task == "boolean":
        return AnswerLabel("Yes" if hits.size else "No")
    if hits.size == 0:
        return AnswerLabel("NoAnswer")
    start = sample.context_start + int(hits[0]) + 1
    return AnswerLabel("Span", start, start + answer_len - 1)


def generate_question_types(n_samples, seed, max_seq_len=64, split="train"):
    """Boolean-template vs wh-template questions for the question type model

    Parameters
    ----------
    n_samples : int
        number of questions (labels balanced)
    seed : int
        generator seed
    max_seq_len : int
        encoding window
    split : str
        split tag of the dataset

    Returns
    -------
    dataset : Dataset
        question_type samples labeled Boolean or Extractive
    """
    rng = make_rng(seed, stream=(TASK_STREAMS["Q"],))
    is_boolean = rng.permutation(np.arange(n_samples) % 2 == 0)
    samples = list()
    for index in range(n_samples):
        starts = BOOLEAN_STARTS if is_boolean[index] else WH_STARTS
        words = [
            starts[int(rng.integers(len(starts)))],
            SUBJECTS[int(rng.integers(len(SUBJECTS)))],
            PREDICATES[int(rng.integers(len(PREDICATES)))],
        ]
        sample = encode_question(preprocess_question(" ".join(words)), max_seq_len)
        sample.label = AnswerLabel("Boolean" if is_boolean[index] else "Extractive")
        sample.sample_id = "Q-" + str(index)
        samples.append(sample)
    return Dataset(samples=samples, split=split, provenance="synthetic-Q")

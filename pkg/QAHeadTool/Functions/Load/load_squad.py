from logging import getLogger
from os.path import basename

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Functions import (
    EmptyQuestionError,
    ParseError,
    SchemaError,
    SpanTruncatedError,
)
from QAHeadTool.Functions.Load.load_json import LoadJSONError, load_json
from QAHeadTool.Functions.tokenizer import align_char_span, encode, preprocess_question

logger = getLogger(__name__)


def _get(record, key, expected, where):
    """record[key] checked against the expected type"""
    value = record.get(key) if isinstance(record, dict) else None
    if not isinstance(value, expected) or isinstance(value, bool) and expected is int:
        raise SchemaError(where + ': field "' + key + '" missing or of wrong type')
    return value


def load_squad(file_path, max_seq_len, split="dev"):
    """Load a SQuAD 2.0 json file

    is_impossible questions become NoAnswer samples; the others get the Span
    of their first listed answer. Answers truncated out of the encoding window
    are downgraded to NoAnswer and counted in Dataset.n_truncated.

    Parameters
    ----------
    file_path : str
        data -> paragraphs -> qas nested json
    max_seq_len : int
        encoding window
    split : str
        train or dev

    Returns
    -------
    dataset : Dataset
        extractive samples
    """
    try:
        _, squad = load_json(file_path)
    except LoadJSONError as error:
        raise ParseError(str(error))
    samples = list()
    n_truncated = 0
    n_impossible = 0
    for article in _get(squad, "data", list, basename(file_path)):
        for paragraph in _get(article, "paragraphs", list, basename(file_path)):
            context = _get(paragraph, "context", str, basename(file_path))
            for qa in _get(paragraph, "qas", list, basename(file_path)):
                qa_id = str(qa.get("id", "?")) if isinstance(qa, dict) else "?"
                where = "qa " + qa_id
                question = _get(qa, "question", str, where)
                is_impossible = _get(qa, "is_impossible", bool, where)
                answers = _get(qa, "answers", list, where)
                try:
                    sample = encode(preprocess_question(question), context, max_seq_len)
                except EmptyQuestionError as error:
                    raise SchemaError(where + ": " + str(error))
                sample.task = "extractive"
                sample.sample_id = qa_id
                if is_impossible:
                    n_impossible += 1
                    sample.label = AnswerLabel("NoAnswer")
                    samples.append(sample)
                    continue
                if len(answers) == 0:
                    raise SchemaError(where + ": answerable question without answers")
                texts = [_get(answer, "text", str, where) for answer in answers]
                char_start = _get(answers[0], "answer_start", int, where)
                try:
                    token_start, token_end = align_char_span(sample, char_start, texts[0])
                except SchemaError as error:
                    raise SchemaError(where + ": " + str(error))
                except SpanTruncatedError:
                    n_truncated += 1
                    logger.warning("%s: answer truncated, labeled NoAnswer", where)
                    sample.label = AnswerLabel("NoAnswer")
                    samples.append(sample)
                    continue
                sample.label = AnswerLabel("Span", token_start, token_end)
                sample.gold_texts = texts
                samples.append(sample)
    dataset = Dataset(
        samples=samples,
        split=split,
        provenance="squad",
        n_truncated=n_truncated,
        name=basename(file_path),
    )
    logger.info(
        "loaded %s (%d adversarial, %d truncated spans)", dataset, n_impossible, n_truncated
    )
    return dataset

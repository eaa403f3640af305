from json import JSONDecodeError, loads
from logging import getLogger
from os.path import basename, isfile

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Functions import (
    ParseError,
    SchemaError,
    SpanTruncatedError,
    task_categories,
)
from QAHeadTool.Functions.Load.load_json import LoadMissingFileError
from QAHeadTool.Functions.tokenizer import align_char_span, encode, encode_question

KEYS = ["question", "context", "task", "label", "span_char_start", "span_text"]


def load_jsonl_dataset(file_path, max_seq_len, split="train", provenance="jsonl"):
    """Load a dataset written by Dataset.save_jsonl (synthetic format)

    Parameters
    ----------
    file_path : str
        JSON-lines file with the keys question, context, task, label,
        span_char_start and span_text
    max_seq_len : int
        encoding window
    split : str
        train or dev
    provenance : str
        provenance tag of the returned Dataset

    Returns
    -------
    dataset : Dataset
        re-encoded samples
    """
    if not isfile(file_path):
        raise LoadMissingFileError(str(file_path) + " doesn't exist")
    samples = list()
    n_truncated = 0
    with open(file_path, "r", encoding="utf-8") as jsonl_file:
        for line_number, line in enumerate(jsonl_file, start=1):
            if line.strip() == "":
                continue
            where = basename(file_path) + " line " + str(line_number)
            try:
                record = loads(line)
            except JSONDecodeError as error:
                raise ParseError(where + ": " + str(error))
            if not isinstance(record, dict) or any(key not in record for key in KEYS):
                raise SchemaError(where + ": keys " + str(KEYS) + " expected")
            task, kind = record["task"], record["label"]
            if kind not in task_categories.get(task, []):
                raise SchemaError(where + ": label " + repr(kind) + " for task " + repr(task))
            if task == "question_type":
                sample = encode_question(record["question"], max_seq_len)
            else:
                sample = encode(record["question"], record["context"], max_seq_len)
                sample.task = task
            sample.sample_id = basename(file_path) + "-" + str(line_number)
            if kind == "Span":
                try:
                    token_start, token_end = align_char_span(
                        sample, record["span_char_start"], record["span_text"]
                    )
                    sample.label = AnswerLabel("Span", token_start, token_end)
                    sample.gold_texts = [record["span_text"]]
                except SpanTruncatedError:
                    n_truncated += 1
                    sample.label = AnswerLabel("NoAnswer")
            else:
                sample.label = AnswerLabel(kind)
            samples.append(sample)
    dataset = Dataset(
        samples=samples,
        split=split,
        provenance=provenance,
        n_truncated=n_truncated,
        name=basename(file_path),
    )
    getLogger(__name__).info("loaded %s", dataset)
    return dataset

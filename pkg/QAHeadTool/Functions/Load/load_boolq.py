from json import JSONDecodeError, loads
from logging import getLogger
from os.path import basename, isfile

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Functions import EmptyQuestionError, ParseError, SchemaError
from QAHeadTool.Functions.Load.load_json import LoadMissingFileError
from QAHeadTool.Functions.tokenizer import encode, preprocess_question


def load_boolq(file_path, max_seq_len, split="dev"):
    """Load a BoolQ JSON-lines file

    Parameters
    ----------
    file_path : str
        one {question, passage, answer} object per line (title is ignored)
    max_seq_len : int
        encoding window
    split : str
        train or dev

    Returns
    -------
    dataset : Dataset
        boolean samples labeled Yes / No
    """
    if not isfile(file_path):
        raise LoadMissingFileError(str(file_path) + " doesn't exist")
    samples = list()
    with open(file_path, "r", encoding="utf-8") as boolq_file:
        for line_number, line in enumerate(boolq_file, start=1):
            if line.strip() == "":
                continue
            try:
                record = loads(line)
            except JSONDecodeError as error:
                raise ParseError(
                    basename(file_path) + " line " + str(line_number) + ": " + str(error)
                )
            where = basename(file_path) + " line " + str(line_number)
            if not isinstance(record, dict):
                raise SchemaError(where + ": object expected")
            for key, expected in [("question", str), ("passage", str), ("answer", bool)]:
                if not isinstance(record.get(key), expected):
                    raise SchemaError(
                        where + ': field "' + key + '" missing or not a ' + expected.__name__
                    )
            try:
                sample = encode(
                    preprocess_question(record["question"]), record["passage"], max_seq_len
                )
            except EmptyQuestionError as error:
                raise SchemaError(where + ": " + str(error))
            sample.task = "boolean"
            sample.label = AnswerLabel("Yes" if record["answer"] else "No")
            sample.sample_id = "boolq-" + str(line_number)
            samples.append(sample)
    dataset = Dataset(
        samples=samples, split=split, provenance="boolq", name=basename(file_path)
    )
    getLogger(__name__).info("loaded %s", dataset)
    return dataset

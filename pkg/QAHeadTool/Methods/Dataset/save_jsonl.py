from json import dumps
from os import makedirs
from os.path import dirname

import numpy as np


def save_jsonl(self, file_path):
    """Write the dataset as JSON-lines
    One object per sample with the keys question, context, task, label,
    span_char_start and span_text (load_jsonl_dataset reads it back).
    Parameters
    ----------
    self: Dataset
        a Dataset object
    file_path: str
        path of the .jsonl file
    Returns
    -------
    file_path: str
        path of the written file
    """
    folder = dirname(file_path)
    if folder:
        makedirs(folder, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as jsonl_file:
        for sample in self.samples:
            span_char_start, span_text = None, ""
            if sample.label.is_span:
                span_char_start = int(
                    np.flatnonzero(sample.char_to_token == sample.label.token_start)[0]
                )
                span_text = sample.get_span_text()
            record = {
                "question": sample.question,
                "context": sample.context,
                "task": sample.task,
                "label": sample.label.kind,
                "span_char_start": span_char_start,
                "span_text": span_text,
            }
            jsonl_file.write(dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
    return file_path

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Functions.tokenizer import encode_question

TASK_TO_TYPE = {"boolean": "Boolean", "extractive": "Extractive"}


def to_question_types(self, max_seq_len):
    """Returns the questions of the dataset labeled by their type
    Boolean-task questions become Boolean samples, extractive-task questions
    become Extractive samples; the context is dropped.
    Parameters
    ----------
    self: Dataset
        dataset of boolean and/or extractive samples
    max_seq_len: int
        encoding window
    Returns
    -------
    questions: Dataset
        question_type samples
    """
    samples = list()
    for sample in self.samples:
        encoded = encode_question(sample.question, max_seq_len)
        encoded.label = AnswerLabel(kind=TASK_TO_TYPE[sample.task])
        encoded.sample_id = sample.sample_id
        samples.append(encoded)
    return type(self)(
        samples=samples, split=self.split, provenance=self.provenance, name=self.name
    )

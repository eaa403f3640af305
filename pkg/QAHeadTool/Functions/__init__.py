class QAError(Exception):
    """Raised when there is an error within the question answering tool"""

    pass


class DimensionError(QAError):
    """Raised when two arrays do not have compatible shapes"""

    pass


class NumericError(QAError):
    """Raised when a loss, gradient or activation is not finite"""

    pass


class InvalidSupportError(QAError):
    """Raised when a softmax row has no supported position"""

    pass


class UsageError(QAError):
    """Raised when a function is called with incompatible inputs"""

    pass


class RegimeError(QAError):
    """Raised when a label or output does not belong to the model regime"""

    pass


class EmptyQuestionError(QAError):
    """Raised when a question is empty after trimming whitespace"""

    pass


class QuestionTooLongError(QAError):
    """Raised when the question alone does not fit in the encoding window"""

    pass


class SpanTruncatedError(QAError):
    """Raised when an answer span falls outside the encoding window"""

    pass


class ParseError(QAError):
    """Raised when a data file line cannot be decoded"""

    pass


class SchemaError(QAError):
    """Raised when a data record misses a field or has a wrong value"""

    pass


class SpecError(QAError):
    """Raised when a synthetic dataset specification is not feasible"""

    pass


class CheckpointError(QAError):
    """Raised when a checkpoint directory cannot be read or written"""

    pass


# Answer categories of each regime, in f_a index order
regime_categories = {
    "boolq": ["No", "Yes"],
    "squad": ["NoAnswer", "Span"],
    "all": ["No", "Yes", "NoAnswer", "Span"],
    "question_type": ["Boolean", "Extractive"],
}

# Labels allowed for each sample task
task_categories = {
    "boolean": ["No", "Yes"],
    "extractive": ["NoAnswer", "Span"],
    "question_type": ["Boolean", "Extractive"],
}

# Sample tasks each regime can train on
regime_tasks = {
    "boolq": ["boolean"],
    "squad": ["extractive"],
    "all": ["boolean", "extractive"],
    "question_type": ["question_type"],
}

# -*- coding: utf-8 -*-
"""Tokenized [CLS] question [SEP] context sequence with its label

Method code available in QAHeadTool/Methods/EncodedSample
"""

from numpy import array, asarray, int64

from ._check import check_var, check_choice, raise_
from ._frozen import FrozenClass
from .AnswerLabel import AnswerLabel

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.EncodedSample.check import check
except ImportError as error:
    check = error

try:
    from ..Methods.EncodedSample.get_span_text import get_span_text
except ImportError as error:
    get_span_text = error


class EncodedSample(FrozenClass):
    """One model input; the context region is token_ids[context_start:context_end]"""

    VERSION = 1

    # cf Methods.EncodedSample.check
    if isinstance(check, ImportError):
        check = property(
            fget=lambda x: raise_(
                ImportError("Can't use EncodedSample method check: " + str(check))
            )
        )
    else:
        check = check
    # cf Methods.EncodedSample.get_span_text
    if isinstance(get_span_text, ImportError):
        get_span_text = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use EncodedSample method get_span_text: " + str(get_span_text)
                )
            )
        )
    else:
        get_span_text = get_span_text

    def __init__(
        self,
        token_ids=None,
        context_start=0,
        context_end=0,
        label=None,
        task="",
        question="",
        context="",
        char_to_token=None,
        sample_id="",
        gold_texts=None,
        init_dict=None,
    ):
        """Constructor of the class. Can be use in two ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys"""

        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            token_ids = init_dict.get("token_ids", token_ids)
            context_start = init_dict.get("context_start", context_start)
            context_end = init_dict.get("context_end", context_end)
            label = init_dict.get("label", label)
            task = init_dict.get("task", task)
            question = init_dict.get("question", question)
            context = init_dict.get("context", context)
            char_to_token = init_dict.get("char_to_token", char_to_token)
            sample_id = init_dict.get("sample_id", sample_id)
            gold_texts = init_dict.get("gold_texts", gold_texts)
        if isinstance(label, dict):
            label = AnswerLabel(init_dict=label)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.token_ids = token_ids
        self.context_start = context_start
        self.context_end = context_end
        self.label = label
        self.task = task
        self.question = question
        self.context = context
        self.char_to_token = char_to_token
        self.sample_id = sample_id
        self.gold_texts = list() if gold_texts is None else gold_texts

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        return (
            self.sample_id
            + " ["
            + self.task
            + "] "
            + repr(self.question)
            + " -> "
            + str(self.label)
        )

    def __len__(self):
        return int(self.token_ids.size)

    def __hash__(self):
        return hash((self.sample_id, self.token_ids.tobytes(), str(self.label)))

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "token_ids": self.token_ids.tolist(),
            "context_start": self.context_start,
            "context_end": self.context_end,
            "label": None if self.label is None else self.label.as_dict(),
            "task": self.task,
            "question": self.question,
            "context": self.context,
            "char_to_token": self.char_to_token.tolist(),
            "sample_id": self.sample_id,
            "gold_texts": list(self.gold_texts),
            "__class__": "EncodedSample",
        }

    def _get_token_ids(self):
        """getter of token_ids"""
        return self._token_ids

    def _set_token_ids(self, value):
        """setter of token_ids"""
        if value is None:
            value = array([], dtype=int64)
        self._token_ids = asarray(value, dtype=int64)

    token_ids = property(
        fget=_get_token_ids,
        fset=_set_token_ids,
        doc=u"""Token ids, token_ids[0] is CLS

        :Type: ndarray
        """,
    )

    def _get_context_start(self):
        """getter of context_start"""
        return self._context_start

    def _set_context_start(self, value):
        """setter of context_start"""
        check_var("context_start", value, "int", Vmin=0)
        self._context_start = int(value)

    context_start = property(
        fget=_get_context_start,
        fset=_set_context_start,
        doc=u"""Index of the first context token

        :Type: int
        """,
    )

    def _get_context_end(self):
        """getter of context_end"""
        return self._context_end

    def _set_context_end(self, value):
        """setter of context_end"""
        check_var("context_end", value, "int", Vmin=0)
        self._context_end = int(value)

    context_end = property(
        fget=_get_context_end,
        fset=_set_context_end,
        doc=u"""Index after the last context token (exclusive)

        :Type: int
        """,
    )

    def _get_label(self):
        """getter of label"""
        return self._label

    def _set_label(self, value):
        """setter of label"""
        check_var("label", value, "AnswerLabel")
        self._label = value

    label = property(
        fget=_get_label,
        fset=_set_label,
        doc=u"""Gold answer (None until the caller attaches it)

        :Type: AnswerLabel
        """,
    )

    def _get_task(self):
        """getter of task"""
        return self._task

    def _set_task(self, value):
        """setter of task"""
        check_var("task", value, "str")
        check_choice("task", value, ["", "boolean", "extractive", "question_type"])
        self._task = value

    task = property(
        fget=_get_task,
        fset=_set_task,
        doc=u"""boolean, extractive or question_type

        :Type: str
        """,
    )

    def _get_question(self):
        """getter of question"""
        return self._question

    def _set_question(self, value):
        """setter of question"""
        check_var("question", value, "str")
        self._question = value

    question = property(
        fget=_get_question,
        fset=_set_question,
        doc=u"""Preprocessed question text

        :Type: str
        """,
    )

    def _get_context(self):
        """getter of context"""
        return self._context

    def _set_context(self, value):
        """setter of context"""
        check_var("context", value, "str")
        self._context = value

    context = property(
        fget=_get_context,
        fset=_set_context,
        doc=u"""Original (untruncated) context text

        :Type: str
        """,
    )

    def _get_char_to_token(self):
        """getter of char_to_token"""
        return self._char_to_token

    def _set_char_to_token(self, value):
        """setter of char_to_token"""
        if value is None:
            value = array([], dtype=int64)
        self._char_to_token = asarray(value, dtype=int64)

    char_to_token = property(
        fget=_get_char_to_token,
        fset=_set_char_to_token,
        doc=u"""Token index of the first byte of each context character (-1 when
        truncated away)

        :Type: ndarray
        """,
    )

    def _get_sample_id(self):
        """getter of sample_id"""
        return self._sample_id

    def _set_sample_id(self, value):
        """setter of sample_id"""
        check_var("sample_id", value, "str")
        self._sample_id = value

    sample_id = property(
        fget=_get_sample_id,
        fset=_set_sample_id,
        doc=u"""Identity of the sample (qa id, line number or generator index)

        :Type: str
        """,
    )

    def _get_gold_texts(self):
        """getter of gold_texts"""
        return self._gold_texts

    def _set_gold_texts(self, value):
        """setter of gold_texts"""
        check_var("gold_texts", value, "list")
        self._gold_texts = value

    gold_texts = property(
        fget=_get_gold_texts,
        fset=_set_gold_texts,
        doc=u"""Every listed gold answer text (empty for NoAnswer and boolean)

        :Type: list
        """,
    )

# -*- coding: utf-8 -*-
"""Gold answer of a sample: No, Yes, NoAnswer or Span (plus the question type
categories Boolean and Extractive of the discriminator)
"""

from ._check import CheckError, check_var, check_choice
from ._frozen import FrozenClass

LABEL_KINDS = ["No", "Yes", "NoAnswer", "Span", "Boolean", "Extractive"]


class AnswerLabel(FrozenClass):
    """token_start/token_end are set iff kind is Span"""

    VERSION = 1

    def __init__(self, kind="NoAnswer", token_start=None, token_end=None, init_dict=None):
        """Constructor of the class. Can be use in two ways :
        - __init__ (kind="Span", token_start=s, token_end=e)
        - __init__ (init_dict = d) d must be a dictionary with property names as keys"""

        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            kind = init_dict.get("kind", kind)
            token_start = init_dict.get("token_start", token_start)
            token_end = init_dict.get("token_end", token_end)
        self.parent = None
        self.kind = kind
        self.token_start = token_start
        self.token_end = token_end
        if (kind == "Span") != (token_start is not None and token_end is not None):
            raise CheckError("Span labels (and only them) carry token_start/token_end")
        if kind == "Span" and token_start > token_end:
            raise CheckError(
                "Span start " + str(token_start) + " after end " + str(token_end)
            )

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        if self.is_span:
            return "Span{" + str(self.token_start) + "," + str(self.token_end) + "}"
        return self.kind

    def __hash__(self):
        return hash((self.kind, self.token_start, self.token_end))

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "kind": self.kind,
            "token_start": self.token_start,
            "token_end": self.token_end,
            "__class__": "AnswerLabel",
        }

    def _get_kind(self):
        """getter of kind"""
        return self._kind

    def _set_kind(self, value):
        """setter of kind"""
        check_var("kind", value, "str")
        check_choice("kind", value, LABEL_KINDS)
        self._kind = value

    kind = property(
        fget=_get_kind,
        fset=_set_kind,
        doc=u"""Answer category

        :Type: str
        """,
    )

    def _get_token_start(self):
        """getter of token_start"""
        return self._token_start

    def _set_token_start(self, value):
        """setter of token_start"""
        check_var("token_start", value, "int", Vmin=0)
        self._token_start = None if value is None else int(value)

    token_start = property(
        fget=_get_token_start,
        fset=_set_token_start,
        doc=u"""Token index of the first answer byte (Span only)

        :Type: int
        """,
    )

    def _get_token_end(self):
        """getter of token_end"""
        return self._token_end

    def _set_token_end(self, value):
        """setter of token_end"""
        check_var("token_end", value, "int", Vmin=0)
        self._token_end = None if value is None else int(value)

    token_end = property(
        fget=_get_token_end,
        fset=_set_token_end,
        doc=u"""Token index of the last answer byte, inclusive (Span only)

        :Type: int
        """,
    )

    def _get_is_span(self):
        """getter of is_span"""
        return self._kind == "Span"

    is_span = property(
        fget=_get_is_span,
        doc=u"""Answerability indicator 1{has_ans}: True iff the label is a Span""",
    )

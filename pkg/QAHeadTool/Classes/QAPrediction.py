# -*- coding: utf-8 -*-
"""Decoded answer of one sample"""

from ._check import check_var
from ._frozen import FrozenClass


class QAPrediction(FrozenClass):
    """Span fields are set iff category is Span"""

    VERSION = 1

    def __init__(
        self,
        category="NoAnswer",
        token_start=None,
        token_end=None,
        text="",
        probability=0.0,
        span_score=None,
        is_fallback=False,
    ):
        """Constructor of the class
        category: str
            predicted answer category
        token_start: int
            first token of the decoded span
        token_end: int
            last token of the decoded span (inclusive)
        text: str
            decoded span text
        probability: float
            f_a probability of the predicted category
        span_score: float
            f_s[start] * f_e[end] of the decoded span
        is_fallback: bool
            True when Span was predicted but no span was feasible"""

        self.parent = None
        self.category = category
        self.token_start = token_start
        self.token_end = token_end
        self.text = text
        self.probability = probability
        self.span_score = span_score
        self.is_fallback = is_fallback

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        if self.category == "Span":
            span = "Span(" + str(self.token_start) + "," + str(self.token_end) + ")"
            return span + " " + repr(self.text)
        return self.category

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict"""
        return {
            "category": self.category,
            "token_start": self.token_start,
            "token_end": self.token_end,
            "text": self.text,
            "probability": self.probability,
            "span_score": self.span_score,
            "is_fallback": self.is_fallback,
            "__class__": "QAPrediction",
        }

    def _get_category(self):
        """getter of category"""
        return self._category

    def _set_category(self, value):
        """setter of category"""
        check_var("category", value, "str")
        self._category = value

    category = property(
        fget=_get_category,
        fset=_set_category,
        doc=u"""Predicted category (No, Yes, NoAnswer, Span, Boolean or Extractive)

        :Type: str
        """,
    )

    def _get_probability(self):
        """getter of probability"""
        return self._probability

    def _set_probability(self, value):
        """setter of probability"""
        check_var("probability", value, "float", Vmin=0)
        self._probability = float(value)

    probability = property(
        fget=_get_probability,
        fset=_set_probability,
        doc=u"""f_a probability of the category

        :Type: float
        """,
    )

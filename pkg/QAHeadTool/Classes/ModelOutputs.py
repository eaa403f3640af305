# -*- coding: utf-8 -*-
"""Output distributions f_a, f_s, f_e of one sample (plus the attention trace)

Method code available in QAHeadTool/Methods/ModelOutputs
"""

from numpy import asarray, float64

from ._check import check_var, raise_
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.ModelOutputs.save_trace import save_trace
except ImportError as error:
    save_trace = error


class ModelOutputs(FrozenClass):
    """f_s and f_e are None when the span heads are disabled"""

    VERSION = 1

    # cf Methods.ModelOutputs.save_trace
    if isinstance(save_trace, ImportError):
        save_trace = property(
            fget=lambda x: raise_(
                ImportError("Can't use ModelOutputs method save_trace: " + str(save_trace))
            )
        )
    else:
        save_trace = save_trace

    def __init__(
        self,
        f_a=None,
        f_s=None,
        f_e=None,
        trace=None,
        categories=None,
        context_start=0,
        context_end=0,
    ):
        """Constructor of the class
        f_a: ndarray
            probabilities over the answer categories
        f_s: ndarray
            span start probabilities over the sequence positions
        f_e: ndarray
            span end probabilities over the sequence positions
        trace: list
            per layer (H, T, T) attention probabilities (None if not traced)
        categories: list
            category names in f_a order
        context_start: int
            first position of the span support
        context_end: int
            end (exclusive) of the span support"""

        self.parent = None
        self.f_a = f_a
        self.f_s = f_s
        self.f_e = f_e
        self.trace = trace
        self.categories = list() if categories is None else categories
        self.context_start = context_start
        self.context_end = context_end

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        pairs = [
            name + "=" + format(proba, ".4f")
            for name, proba in zip(self.categories, self.f_a)
        ]
        return "f_a: " + ", ".join(pairs)

    def _get_f_a(self):
        """getter of f_a"""
        return self._f_a

    def _set_f_a(self, value):
        """setter of f_a"""
        self._f_a = None if value is None else asarray(value, dtype=float64)

    f_a = property(
        fget=_get_f_a,
        fset=_set_f_a,
        doc=u"""Answer category distribution

        :Type: ndarray
        """,
    )

    def _get_f_s(self):
        """getter of f_s"""
        return self._f_s

    def _set_f_s(self, value):
        """setter of f_s"""
        self._f_s = None if value is None else asarray(value, dtype=float64)

    f_s = property(
        fget=_get_f_s,
        fset=_set_f_s,
        doc=u"""Span start distribution (zero outside the context region)

        :Type: ndarray
        """,
    )

    def _get_f_e(self):
        """getter of f_e"""
        return self._f_e

    def _set_f_e(self, value):
        """setter of f_e"""
        self._f_e = None if value is None else asarray(value, dtype=float64)

    f_e = property(
        fget=_get_f_e,
        fset=_set_f_e,
        doc=u"""Span end distribution (zero outside the context region)

        :Type: ndarray
        """,
    )

    def _get_trace(self):
        """getter of trace"""
        return self._trace

    def _set_trace(self, value):
        """setter of trace"""
        check_var("trace", value, "list")
        self._trace = value

    trace = property(
        fget=_get_trace,
        fset=_set_trace,
        doc=u"""Attention matrices, trace[l][h] is T x T

        :Type: list
        """,
    )

    def _get_categories(self):
        """getter of categories"""
        return self._categories

    def _set_categories(self, value):
        """setter of categories"""
        check_var("categories", value, "list")
        self._categories = value

    categories = property(
        fget=_get_categories,
        fset=_set_categories,
        doc=u"""Names of the answer categories in f_a order

        :Type: list
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
        doc=u"""First position of the span support

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
        doc=u"""End (exclusive) of the span support

        :Type: int
        """,
    )

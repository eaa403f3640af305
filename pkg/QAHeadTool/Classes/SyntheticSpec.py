# -*- coding: utf-8 -*-
"""Parameters of a synthetic needle (Task A) or containment (Task B) dataset"""

from os import linesep

from ._check import check_var
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass


class SyntheticSpec(FrozenClass):
    """Filler bytes never contain the marker letters nor the digits"""

    VERSION = 1

    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(
        self,
        n_samples=1000,
        context_len=48,
        filler="abcdefghijklmnopqrstuvwxyz",
        answerable_fraction=0.5,
        seed=0,
        answer_len=3,
        n_distractors=3,
        max_seq_len=96,
        init_dict=None,
        init_str=None,
    ):
        """Constructor of the class. Can be use in three ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            n_samples = init_dict.get("n_samples", n_samples)
            context_len = init_dict.get("context_len", context_len)
            filler = init_dict.get("filler", filler)
            answerable_fraction = init_dict.get("answerable_fraction", answerable_fraction)
            seed = init_dict.get("seed", seed)
            answer_len = init_dict.get("answer_len", answer_len)
            n_distractors = init_dict.get("n_distractors", n_distractors)
            max_seq_len = init_dict.get("max_seq_len", max_seq_len)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.n_samples = n_samples
        self.context_len = context_len
        self.filler = filler
        self.answerable_fraction = answerable_fraction
        self.seed = seed
        self.answer_len = answer_len
        self.n_distractors = n_distractors
        self.max_seq_len = max_seq_len

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""

        SyntheticSpec_str = ""
        for key, value in self.as_dict().items():
            if key != "__class__":
                SyntheticSpec_str += key + " = " + str(value) + linesep
        return SyntheticSpec_str

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""

        SyntheticSpec_dict = dict()
        SyntheticSpec_dict["n_samples"] = self.n_samples
        SyntheticSpec_dict["context_len"] = self.context_len
        SyntheticSpec_dict["filler"] = self.filler
        SyntheticSpec_dict["answerable_fraction"] = self.answerable_fraction
        SyntheticSpec_dict["seed"] = self.seed
        SyntheticSpec_dict["answer_len"] = self.answer_len
        SyntheticSpec_dict["n_distractors"] = self.n_distractors
        SyntheticSpec_dict["max_seq_len"] = self.max_seq_len
        # The class name is added to the dict for deserialisation purpose
        SyntheticSpec_dict["__class__"] = "SyntheticSpec"
        return SyntheticSpec_dict

    def _get_n_samples(self):
        """getter of n_samples"""
        return self._n_samples

    def _set_n_samples(self, value):
        """setter of n_samples"""
        check_var("n_samples", value, "int", Vmin=1)
        self._n_samples = int(value)

    n_samples = property(
        fget=_get_n_samples,
        fset=_set_n_samples,
        doc=u"""Number of generated samples

        :Type: int
        """,
    )

    def _get_context_len(self):
        """getter of context_len"""
        return self._context_len

    def _set_context_len(self, value):
        """setter of context_len"""
        check_var("context_len", value, "int", Vmin=8)
        self._context_len = int(value)

    context_len = property(
        fget=_get_context_len,
        fset=_set_context_len,
        doc=u"""Context length in bytes

        :Type: int
        :min: 8
        """,
    )

    def _get_filler(self):
        """getter of filler"""
        return self._filler

    def _set_filler(self, value):
        """setter of filler"""
        check_var("filler", value, "str")
        self._filler = value

    filler = property(
        fget=_get_filler,
        fset=_set_filler,
        doc=u"""Characters the contexts are drawn from

        :Type: str
        """,
    )

    def _get_answerable_fraction(self):
        """getter of answerable_fraction"""
        return self._answerable_fraction

    def _set_answerable_fraction(self, value):
        """setter of answerable_fraction"""
        check_var("answerable_fraction", value, "float", Vmin=0, Vmax=1)
        self._answerable_fraction = float(value)

    answerable_fraction = property(
        fget=_get_answerable_fraction,
        fset=_set_answerable_fraction,
        doc=u"""Probability that a Task A sample holds its marker

        :Type: float
        :min: 0
        :max: 1
        """,
    )

    def _get_seed(self):
        """getter of seed"""
        return self._seed

    def _set_seed(self, value):
        """setter of seed"""
        check_var("seed", value, "int", Vmin=0)
        self._seed = int(value)

    seed = property(
        fget=_get_seed,
        fset=_set_seed,
        doc=u"""Seed of the generator

        :Type: int
        """,
    )

    def _get_answer_len(self):
        """getter of answer_len"""
        return self._answer_len

    def _set_answer_len(self, value):
        """setter of answer_len"""
        check_var("answer_len", value, "int", Vmin=1)
        self._answer_len = int(value)

    answer_len = property(
        fget=_get_answer_len,
        fset=_set_answer_len,
        doc=u"""Number of bytes copied after the Task A marker

        :Type: int
        """,
    )

    def _get_n_distractors(self):
        """getter of n_distractors"""
        return self._n_distractors

    def _set_n_distractors(self, value):
        """setter of n_distractors"""
        check_var("n_distractors", value, "int", Vmin=0)
        self._n_distractors = int(value)

    n_distractors = property(
        fget=_get_n_distractors,
        fset=_set_n_distractors,
        doc=u"""Other markers (Task A) or digits (Task B) planted in each context

        :Type: int
        """,
    )

    def _get_max_seq_len(self):
        """getter of max_seq_len"""
        return self._max_seq_len

    def _set_max_seq_len(self, value):
        """setter of max_seq_len"""
        check_var("max_seq_len", value, "int", Vmin=3)
        self._max_seq_len = int(value)

    max_seq_len = property(
        fget=_get_max_seq_len,
        fset=_set_max_seq_len,
        doc=u"""Encoding window of the generated samples

        :Type: int
        """,
    )

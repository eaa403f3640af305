# -*- coding: utf-8 -*-
"""Ordered collection of EncodedSample with a split tag and a provenance

Method code available in QAHeadTool/Methods/Dataset
"""

from ._check import check_var, check_choice, raise_
from ._frozen import FrozenClass
from .EncodedSample import EncodedSample

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.Dataset.mix_and_shuffle import mix_and_shuffle
except ImportError as error:
    mix_and_shuffle = error

try:
    from ..Methods.Dataset.train_dev_split import train_dev_split
except ImportError as error:
    train_dev_split = error

try:
    from ..Methods.Dataset.filter_task import filter_task
except ImportError as error:
    filter_task = error

try:
    from ..Methods.Dataset.get_task_counts import get_task_counts
except ImportError as error:
    get_task_counts = error

try:
    from ..Methods.Dataset.save_jsonl import save_jsonl
except ImportError as error:
    save_jsonl = error

try:
    from ..Methods.Dataset.to_question_types import to_question_types
except ImportError as error:
    to_question_types = error

PROVENANCES = [
    "boolq",
    "squad",
    "mixed",
    "synthetic-A",
    "synthetic-B",
    "synthetic-Q",
    "jsonl",
]


class Dataset(FrozenClass):
    """Samples are immutable once loaded; transformations return new Datasets"""

    VERSION = 1

    # cf Methods.Dataset.mix_and_shuffle
    if isinstance(mix_and_shuffle, ImportError):
        mix_and_shuffle = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Dataset method mix_and_shuffle: " + str(mix_and_shuffle)
                )
            )
        )
    else:
        mix_and_shuffle = mix_and_shuffle
    # cf Methods.Dataset.train_dev_split
    if isinstance(train_dev_split, ImportError):
        train_dev_split = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Dataset method train_dev_split: " + str(train_dev_split)
                )
            )
        )
    else:
        train_dev_split = train_dev_split
    # cf Methods.Dataset.filter_task
    if isinstance(filter_task, ImportError):
        filter_task = property(
            fget=lambda x: raise_(
                ImportError("Can't use Dataset method filter_task: " + str(filter_task))
            )
        )
    else:
        filter_task = filter_task
    # cf Methods.Dataset.get_task_counts
    if isinstance(get_task_counts, ImportError):
        get_task_counts = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Dataset method get_task_counts: " + str(get_task_counts)
                )
            )
        )
    else:
        get_task_counts = get_task_counts
    # cf Methods.Dataset.save_jsonl
    if isinstance(save_jsonl, ImportError):
        save_jsonl = property(
            fget=lambda x: raise_(
                ImportError("Can't use Dataset method save_jsonl: " + str(save_jsonl))
            )
        )
    else:
        save_jsonl = save_jsonl
    # cf Methods.Dataset.to_question_types
    if isinstance(to_question_types, ImportError):
        to_question_types = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Dataset method to_question_types: "
                    + str(to_question_types)
                )
            )
        )
    else:
        to_question_types = to_question_types

    def __init__(
        self,
        samples=None,
        split="train",
        provenance="jsonl",
        n_truncated=0,
        name="",
        init_dict=None,
    ):
        """Constructor of the class. Can be use in two ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys"""

        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            samples = init_dict.get("samples", samples)
            split = init_dict.get("split", split)
            provenance = init_dict.get("provenance", provenance)
            n_truncated = init_dict.get("n_truncated", n_truncated)
            name = init_dict.get("name", name)
        if samples is not None:
            samples = [
                EncodedSample(init_dict=sample) if isinstance(sample, dict) else sample
                for sample in samples
            ]
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.samples = list() if samples is None else samples
        self.split = split
        self.provenance = provenance
        self.n_truncated = n_truncated
        self.name = name

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        return (
            self.get_id()
            + ": "
            + str(len(self.samples))
            + " samples "
            + str(self.get_task_counts())
        )

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    def __getitem__(self, index):
        return self.samples[index]

    def get_id(self):
        """Returns the dataset identifier used in reports"""
        return self.name or (self.provenance + "-" + self.split)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "samples": [sample.as_dict() for sample in self.samples],
            "split": self.split,
            "provenance": self.provenance,
            "n_truncated": self.n_truncated,
            "name": self.name,
            "__class__": "Dataset",
        }

    def _get_samples(self):
        """getter of samples"""
        return self._samples

    def _set_samples(self, value):
        """setter of samples"""
        check_var("samples", value, "[EncodedSample]")
        self._samples = value

    samples = property(
        fget=_get_samples,
        fset=_set_samples,
        doc=u"""Samples in dataset order

        :Type: [EncodedSample]
        """,
    )

    def _get_split(self):
        """getter of split"""
        return self._split

    def _set_split(self, value):
        """setter of split"""
        check_var("split", value, "str")
        check_choice("split", value, ["train", "dev"])
        self._split = value

    split = property(
        fget=_get_split,
        fset=_set_split,
        doc=u"""train or dev

        :Type: str
        """,
    )

    def _get_provenance(self):
        """getter of provenance"""
        return self._provenance

    def _set_provenance(self, value):
        """setter of provenance"""
        check_var("provenance", value, "str")
        check_choice("provenance", value, PROVENANCES)
        self._provenance = value

    provenance = property(
        fget=_get_provenance,
        fset=_set_provenance,
        doc=u"""Source of the samples

        :Type: str
        """,
    )

    def _get_n_truncated(self):
        """getter of n_truncated"""
        return self._n_truncated

    def _set_n_truncated(self, value):
        """setter of n_truncated"""
        check_var("n_truncated", value, "int", Vmin=0)
        self._n_truncated = int(value)

    n_truncated = property(
        fget=_get_n_truncated,
        fset=_set_n_truncated,
        doc=u"""Number of spans downgraded to NoAnswer by truncation

        :Type: int
        """,
    )

    def _get_name(self):
        """getter of name"""
        return self._name

    def _set_name(self, value):
        """setter of name"""
        check_var("name", value, "str")
        self._name = value

    name = property(
        fget=_get_name,
        fset=_set_name,
        doc=u"""Optional dataset identifier (file name)

        :Type: str
        """,
    )

# -*- coding: utf-8 -*-
"""Dev metrics of a dataset: boolean accuracy and extractive token F1

Method code available in QAHeadTool/Methods/Metrics
"""

from ._check import check_var, raise_
from ..Functions.save import save
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.Metrics.get_points import get_points
except ImportError as error:
    get_points = error


class Metrics(FrozenClass):
    """accuracy is None without boolean samples, f1 is None without
    extractive samples"""

    VERSION = 1

    # cf Methods.Metrics.get_points
    if isinstance(get_points, ImportError):
        get_points = property(
            fget=lambda x: raise_(
                ImportError("Can't use Metrics method get_points: " + str(get_points))
            )
        )
    else:
        get_points = get_points
    # save method is available in all object
    save = save

    def __init__(
        self,
        task="",
        n=0,
        accuracy=None,
        f1=None,
        confusion=None,
        n_fallback=0,
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
            task = init_dict.get("task", task)
            n = init_dict.get("n", n)
            accuracy = init_dict.get("accuracy", accuracy)
            f1 = init_dict.get("f1", f1)
            confusion = init_dict.get("confusion", confusion)
            n_fallback = init_dict.get("n_fallback", n_fallback)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.task = task
        self.n = n
        self.accuracy = accuracy
        self.f1 = f1
        self.confusion = dict() if confusion is None else confusion
        self.n_fallback = n_fallback

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        parts = [self.task, "n=" + str(self.n)]
        if self.accuracy is not None:
            parts.append("accuracy=" + format(self.accuracy, ".4f"))
        if self.f1 is not None:
            parts.append("f1=" + format(self.f1, ".4f"))
        return " ".join(parts)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "task": self.task,
            "n": self.n,
            "accuracy": self.accuracy,
            "f1": self.f1,
            "confusion": self.confusion,
            "n_fallback": self.n_fallback,
            "__class__": "Metrics",
        }

    def _get_task(self):
        """getter of task"""
        return self._task

    def _set_task(self, value):
        """setter of task"""
        check_var("task", value, "str")
        self._task = value

    task = property(
        fget=_get_task,
        fset=_set_task,
        doc=u"""Identifier of the evaluated dataset

        :Type: str
        """,
    )

    def _get_n(self):
        """getter of n"""
        return self._n

    def _set_n(self, value):
        """setter of n"""
        check_var("n", value, "int", Vmin=0)
        self._n = int(value)

    n = property(
        fget=_get_n,
        fset=_set_n,
        doc=u"""Number of evaluated samples

        :Type: int
        """,
    )

    def _get_accuracy(self):
        """getter of accuracy"""
        return self._accuracy

    def _set_accuracy(self, value):
        """setter of accuracy"""
        check_var("accuracy", value, "float", Vmin=0, Vmax=1)
        self._accuracy = None if value is None else float(value)

    accuracy = property(
        fget=_get_accuracy,
        fset=_set_accuracy,
        doc=u"""Exact category match rate over the boolean (and question type) samples

        :Type: float
        :min: 0
        :max: 1
        """,
    )

    def _get_f1(self):
        """getter of f1"""
        return self._f1

    def _set_f1(self, value):
        """setter of f1"""
        check_var("f1", value, "float", Vmin=0, Vmax=1)
        self._f1 = None if value is None else float(value)

    f1 = property(
        fget=_get_f1,
        fset=_set_f1,
        doc=u"""Mean token F1 over the extractive samples

        :Type: float
        :min: 0
        :max: 1
        """,
    )

    def _get_confusion(self):
        """getter of confusion"""
        return self._confusion

    def _set_confusion(self, value):
        """setter of confusion"""
        check_var("confusion", value, "dict")
        self._confusion = value

    confusion = property(
        fget=_get_confusion,
        fset=_set_confusion,
        doc=u"""confusion[gold][predicted] = count

        :Type: dict
        """,
    )

    def _get_n_fallback(self):
        """getter of n_fallback"""
        return self._n_fallback

    def _set_n_fallback(self, value):
        """setter of n_fallback"""
        check_var("n_fallback", value, "int", Vmin=0)
        self._n_fallback = int(value)

    n_fallback = property(
        fget=_get_n_fallback,
        fset=_set_n_fallback,
        doc=u"""Span predictions turned into NoAnswer for lack of a feasible span

        :Type: int
        """,
    )

# -*- coding: utf-8 -*-
"""Layer x head change of a dev metric when each head is masked in turn

Method code available in QAHeadTool/Methods/ImportanceMatrix
"""

from numpy import array

from ._check import CheckDimError, check_var, check_choice, check_dimensions, raise_
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.ImportanceMatrix.top_heads import top_heads
except ImportError as error:
    top_heads = error

try:
    from ..Methods.ImportanceMatrix.layer_summary import layer_summary
except ImportError as error:
    layer_summary = error

try:
    from ..Methods.ImportanceMatrix.compare_tasks import compare_tasks
except ImportError as error:
    compare_tasks = error

try:
    from ..Methods.ImportanceMatrix.compare_single_and_multi import (
        compare_single_and_multi,
    )
except ImportError as error:
    compare_single_and_multi = error

try:
    from ..Methods.ImportanceMatrix.save_csv import save_csv
except ImportError as error:
    save_csv = error

try:
    from ..Methods.ImportanceMatrix.plot_heatmap import plot_heatmap
except ImportError as error:
    plot_heatmap = error


class ImportanceMatrix(FrozenClass):
    """deltas[l, h] = masked[l, h] - baseline, in metric points (negative
    means the head matters)"""

    VERSION = 1

    # cf Methods.ImportanceMatrix.top_heads
    if isinstance(top_heads, ImportError):
        top_heads = property(
            fget=lambda x: raise_(
                ImportError("Can't use ImportanceMatrix method top_heads: " + str(top_heads))
            )
        )
    else:
        top_heads = top_heads
    # cf Methods.ImportanceMatrix.layer_summary
    if isinstance(layer_summary, ImportError):
        layer_summary = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use ImportanceMatrix method layer_summary: "
                    + str(layer_summary)
                )
            )
        )
    else:
        layer_summary = layer_summary
    # cf Methods.ImportanceMatrix.compare_tasks
    if isinstance(compare_tasks, ImportError):
        compare_tasks = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use ImportanceMatrix method compare_tasks: "
                    + str(compare_tasks)
                )
            )
        )
    else:
        compare_tasks = compare_tasks
    # cf Methods.ImportanceMatrix.compare_single_and_multi
    if isinstance(compare_single_and_multi, ImportError):
        compare_single_and_multi = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use ImportanceMatrix method compare_single_and_multi: "
                    + str(compare_single_and_multi)
                )
            )
        )
    else:
        compare_single_and_multi = compare_single_and_multi
    # cf Methods.ImportanceMatrix.save_csv
    if isinstance(save_csv, ImportError):
        save_csv = property(
            fget=lambda x: raise_(
                ImportError("Can't use ImportanceMatrix method save_csv: " + str(save_csv))
            )
        )
    else:
        save_csv = save_csv
    # cf Methods.ImportanceMatrix.plot_heatmap
    if isinstance(plot_heatmap, ImportError):
        plot_heatmap = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use ImportanceMatrix method plot_heatmap: " + str(plot_heatmap)
                )
            )
        )
    else:
        plot_heatmap = plot_heatmap
    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(
        self,
        deltas=None,
        masked=None,
        baseline=0.0,
        metric="accuracy",
        checkpoint_id="",
        dataset_id="",
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
            deltas = init_dict.get("deltas", deltas)
            masked = init_dict.get("masked", masked)
            baseline = init_dict.get("baseline", baseline)
            metric = init_dict.get("metric", metric)
            checkpoint_id = init_dict.get("checkpoint_id", checkpoint_id)
            dataset_id = init_dict.get("dataset_id", dataset_id)
        if deltas is None:
            deltas = [[0.0]]
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.deltas = deltas
        self.baseline = baseline
        self.masked = self.deltas + baseline if masked is None else masked
        self.metric = metric
        self.checkpoint_id = checkpoint_id
        self.dataset_id = dataset_id

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        lines = [
            self.metric
            + " baseline "
            + format(self.baseline, ".4f")
            + " ("
            + self.dataset_id
            + ")"
        ]
        for layer, row in enumerate(self.deltas):
            lines.append(
                "layer " + str(layer) + ": " + " ".join(format(d, "+.2f") for d in row)
            )
        return "\n".join(lines)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "deltas": self.deltas.tolist(),
            "masked": self.masked.tolist(),
            "baseline": self.baseline,
            "metric": self.metric,
            "checkpoint_id": self.checkpoint_id,
            "dataset_id": self.dataset_id,
            "__class__": "ImportanceMatrix",
        }

    def _get_deltas(self):
        """getter of deltas"""
        return self._deltas

    def _set_deltas(self, value):
        """setter of deltas"""
        if isinstance(value, list):
            value = array(value, dtype=float)
        check_var("deltas", value, "ndarray")
        if value.ndim != 2:
            raise CheckDimError("ImportanceMatrix.deltas must be a L x H matrix")
        self._deltas = value.astype(float)

    deltas = property(
        fget=_get_deltas,
        fset=_set_deltas,
        doc=u"""Metric change (points) of each leave-one-out masking

        :Type: ndarray
        """,
    )

    def _get_masked(self):
        """getter of masked"""
        return self._masked

    def _set_masked(self, value):
        """setter of masked"""
        if isinstance(value, list):
            value = array(value, dtype=float)
        check_var("masked", value, "ndarray")
        check_dimensions(value, self._deltas.shape, "ImportanceMatrix.masked")
        self._masked = value.astype(float)

    masked = property(
        fget=_get_masked,
        fset=_set_masked,
        doc=u"""Metric (points) of each masked evaluation

        :Type: ndarray
        """,
    )

    def _get_baseline(self):
        """getter of baseline"""
        return self._baseline

    def _set_baseline(self, value):
        """setter of baseline"""
        check_var("baseline", value, "float")
        self._baseline = float(value)

    baseline = property(
        fget=_get_baseline,
        fset=_set_baseline,
        doc=u"""Metric (points) of the unmasked model

        :Type: float
        """,
    )

    def _get_metric(self):
        """getter of metric"""
        return self._metric

    def _set_metric(self, value):
        """setter of metric"""
        check_choice("metric", value, ["accuracy", "f1"])
        self._metric = value

    metric = property(
        fget=_get_metric,
        fset=_set_metric,
        doc=u"""Dev metric the deltas are measured on

        :Type: str
        """,
    )

    def _get_checkpoint_id(self):
        """getter of checkpoint_id"""
        return self._checkpoint_id

    def _set_checkpoint_id(self, value):
        """setter of checkpoint_id"""
        check_var("checkpoint_id", value, "str")
        self._checkpoint_id = value

    checkpoint_id = property(
        fget=_get_checkpoint_id,
        fset=_set_checkpoint_id,
        doc=u"""Identifier of the ranked checkpoint

        :Type: str
        """,
    )

    def _get_dataset_id(self):
        """getter of dataset_id"""
        return self._dataset_id

    def _set_dataset_id(self, value):
        """setter of dataset_id"""
        check_var("dataset_id", value, "str")
        self._dataset_id = value

    dataset_id = property(
        fget=_get_dataset_id,
        fset=_set_dataset_id,
        doc=u"""Identifier of the dev set

        :Type: str
        """,
    )

    def _get_shape(self):
        """getter of shape"""
        return self._deltas.shape

    shape = property(fget=_get_shape, doc=u"""(L, H) geometry of the matrix""")

# -*- coding: utf-8 -*-
"""Per-layer five-number summary of an ImportanceMatrix"""

from numpy import array

from ._check import CheckDimError, check_var, check_choice
from ..Functions.save import save
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

STATISTICS = ["min", "q25", "median", "q75", "max"]


class LayerSummary(FrozenClass):
    """stats[l] = [min, 25th percentile, median, 75th percentile, max] of
    the deltas of layer l"""

    VERSION = 1

    # save method is available in all object
    save = save

    def __init__(self, stats=None, metric="accuracy", init_dict=None, init_str=None):
        """Constructor of the class. Can be use in three ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            metric = init_dict.get("metric", metric)
            if "layers" in init_dict:
                stats = [
                    [layer[name] for name in STATISTICS] for layer in init_dict["layers"]
                ]
        if stats is None:
            stats = [[0.0] * len(STATISTICS)]
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.stats = stats
        self.metric = metric

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        lines = ["layer " + " ".join(STATISTICS)]
        for layer, row in enumerate(self.stats):
            lines.append(str(layer) + " " + " ".join(format(v, "+.2f") for v in row))
        return "\n".join(lines)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "metric": self.metric,
            "layers": [
                dict(zip(STATISTICS, [float(v) for v in row])) for row in self.stats
            ],
            "__class__": "LayerSummary",
        }

    def get_statistic(self, name):
        """Returns one statistic for every layer"""
        check_choice("name", name, STATISTICS)
        return self.stats[:, STATISTICS.index(name)]

    def _get_stats(self):
        """getter of stats"""
        return self._stats

    def _set_stats(self, value):
        """setter of stats"""
        if isinstance(value, list):
            value = array(value, dtype=float)
        check_var("stats", value, "ndarray")
        if value.ndim != 2 or value.shape[1] != len(STATISTICS):
            raise CheckDimError("LayerSummary.stats must be a L x 5 matrix")
        self._stats = value.astype(float)

    stats = property(
        fget=_get_stats,
        fset=_set_stats,
        doc=u"""L x 5 order statistics (min, q25, median, q75, max)

        :Type: ndarray
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
        doc=u"""Dev metric of the summarized matrix

        :Type: str
        """,
    )

# -*- coding: utf-8 -*-
"""Summary of a training run"""

from ._check import check_var
from ..Functions.save import save
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass


class TrainReport(FrozenClass):
    """One epoch_losses entry per epoch"""

    VERSION = 1

    # save method is available in all object
    save = save

    def __init__(
        self,
        regime="all",
        seed=0,
        epoch_losses=None,
        epoch_metrics=None,
        wall_clock=0.0,
        checkpoint_path="",
        n_truncated=0,
        n_samples=0,
        total_steps=0,
        init="random",
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
            regime = init_dict.get("regime", regime)
            seed = init_dict.get("seed", seed)
            epoch_losses = init_dict.get("epoch_losses", epoch_losses)
            epoch_metrics = init_dict.get("epoch_metrics", epoch_metrics)
            wall_clock = init_dict.get("wall_clock", wall_clock)
            checkpoint_path = init_dict.get("checkpoint_path", checkpoint_path)
            n_truncated = init_dict.get("n_truncated", n_truncated)
            n_samples = init_dict.get("n_samples", n_samples)
            total_steps = init_dict.get("total_steps", total_steps)
            init = init_dict.get("init", init)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.regime = regime
        self.seed = seed
        self.epoch_losses = list() if epoch_losses is None else epoch_losses
        self.epoch_metrics = list() if epoch_metrics is None else epoch_metrics
        self.wall_clock = wall_clock
        self.checkpoint_path = checkpoint_path
        self.n_truncated = n_truncated
        self.n_samples = n_samples
        self.total_steps = total_steps
        self.init = init

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        losses = ", ".join(format(loss, ".4f") for loss in self.epoch_losses)
        return self.regime + " (seed " + str(self.seed) + "): losses [" + losses + "]"

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "regime": self.regime,
            "seed": self.seed,
            "epoch_losses": list(self.epoch_losses),
            "epoch_metrics": list(self.epoch_metrics),
            "wall_clock": self.wall_clock,
            "checkpoint_path": self.checkpoint_path,
            "n_truncated": self.n_truncated,
            "n_samples": self.n_samples,
            "total_steps": self.total_steps,
            "init": self.init,
            "__class__": "TrainReport",
        }

    def _get_epoch_losses(self):
        """getter of epoch_losses"""
        return self._epoch_losses

    def _set_epoch_losses(self, value):
        """setter of epoch_losses"""
        check_var("epoch_losses", value, "list")
        self._epoch_losses = value

    epoch_losses = property(
        fget=_get_epoch_losses,
        fset=_set_epoch_losses,
        doc=u"""Mean per-sample training loss of each epoch

        :Type: list
        """,
    )

    def _get_epoch_metrics(self):
        """getter of epoch_metrics"""
        return self._epoch_metrics

    def _set_epoch_metrics(self, value):
        """setter of epoch_metrics"""
        check_var("epoch_metrics", value, "list")
        self._epoch_metrics = value

    epoch_metrics = property(
        fget=_get_epoch_metrics,
        fset=_set_epoch_metrics,
        doc=u"""Dev Metrics dict of each epoch (empty without a dev set)

        :Type: list
        """,
    )

    def _get_wall_clock(self):
        """getter of wall_clock"""
        return self._wall_clock

    def _set_wall_clock(self, value):
        """setter of wall_clock"""
        check_var("wall_clock", value, "float", Vmin=0)
        self._wall_clock = float(value)

    wall_clock = property(
        fget=_get_wall_clock,
        fset=_set_wall_clock,
        doc=u"""Duration of the run [s]

        :Type: float
        """,
    )

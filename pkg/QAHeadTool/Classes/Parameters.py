# -*- coding: utf-8 -*-
"""Full trainable weight set of an encoder and its task heads

Method code available in QAHeadTool/Methods/Parameters
"""

from ._check import CheckError, check_var, raise_
from ._frozen import FrozenClass
from .ModelConfig import ModelConfig

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.Parameters.save import save
except ImportError as error:
    save = error

try:
    from ..Methods.Parameters.transfer import transfer
except ImportError as error:
    transfer = error

try:
    from ..Methods.Parameters.get_head_names import get_head_names
except ImportError as error:
    get_head_names = error

try:
    from ..Methods.Parameters.get_head_columns import get_head_columns
except ImportError as error:
    get_head_columns = error


class Parameters(FrozenClass):
    """Ordered collection of Parameter objects, each registered once"""

    VERSION = 1

    # cf Methods.Parameters.save
    if isinstance(save, ImportError):
        save = property(
            fget=lambda x: raise_(
                ImportError("Can't use Parameters method save: " + str(save))
            )
        )
    else:
        save = save
    # cf Methods.Parameters.transfer
    if isinstance(transfer, ImportError):
        transfer = property(
            fget=lambda x: raise_(
                ImportError("Can't use Parameters method transfer: " + str(transfer))
            )
        )
    else:
        transfer = transfer
    # cf Methods.Parameters.get_head_names
    if isinstance(get_head_names, ImportError):
        get_head_names = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Parameters method get_head_names: " + str(get_head_names)
                )
            )
        )
    else:
        get_head_names = get_head_names
    # cf Methods.Parameters.get_head_columns
    if isinstance(get_head_columns, ImportError):
        get_head_columns = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Parameters method get_head_columns: "
                    + str(get_head_columns)
                )
            )
        )
    else:
        get_head_columns = get_head_columns

    def __init__(self, config=None, tensors=None, seed=0):
        """Constructor of the class
        config: ModelConfig
            geometry the tensors follow
        tensors: list
            list of Parameter, in registration order
        seed: int
            seed the weights were initialized (or trained) with"""

        if config is None:
            config = ModelConfig()
        self.parent = None
        self.config = config
        self.tensors = dict()
        self.seed = seed
        for param in tensors or []:
            if param.name in self.tensors:
                raise CheckError("Parameter " + param.name + " registered twice")
            self.tensors[param.name] = param

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        lines = [str(param) for param in self.tensors.values()]
        return "\n".join(lines)

    def __getitem__(self, name):
        return self.tensors[name]

    def __iter__(self):
        return iter(self.tensors.values())

    def get_list(self):
        """Returns the Parameter objects in registration order"""
        return list(self.tensors.values())

    def get_n_values(self):
        """Returns the number of trainable scalars"""
        return sum(param.value.size for param in self.tensors.values())

    def zero_grad(self):
        """Reset every gradient buffer to exact zeros"""
        for param in self.tensors.values():
            param.zero_grad()

    def _get_config(self):
        """getter of config"""
        return self._config

    def _set_config(self, value):
        """setter of config"""
        check_var("config", value, "ModelConfig")
        self._config = value

    config = property(
        fget=_get_config,
        fset=_set_config,
        doc=u"""Geometry of the model

        :Type: ModelConfig
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
        doc=u"""Training seed stored in the checkpoint manifest

        :Type: int
        """,
    )

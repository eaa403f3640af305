# -*- coding: utf-8 -*-
"""Layer x head boolean matrix selecting the attention heads kept in forward

Method code available in QAHeadTool/Methods/HeadMask
"""

from numpy import array, ones

from ._check import CheckDimError, check_var, check_dimensions, raise_
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.HeadMask.from_string import from_string
except ImportError as error:
    from_string = error

try:
    from ..Methods.HeadMask.leave_one_out import leave_one_out
except ImportError as error:
    leave_one_out = error

try:
    from ..Methods.HeadMask.get_masked_heads import get_masked_heads
except ImportError as error:
    get_masked_heads = error


class HeadMask(FrozenClass):
    """keep[l, h] is False for every head whose attention matrix is zeroed"""

    VERSION = 1

    # cf Methods.HeadMask.from_string
    if isinstance(from_string, ImportError):
        from_string = property(
            fget=lambda x: raise_(
                ImportError("Can't use HeadMask method from_string: " + str(from_string))
            )
        )
    else:
        from_string = classmethod(from_string)
    # cf Methods.HeadMask.leave_one_out
    if isinstance(leave_one_out, ImportError):
        leave_one_out = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use HeadMask method leave_one_out: " + str(leave_one_out)
                )
            )
        )
    else:
        leave_one_out = classmethod(leave_one_out)
    # cf Methods.HeadMask.get_masked_heads
    if isinstance(get_masked_heads, ImportError):
        get_masked_heads = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use HeadMask method get_masked_heads: "
                    + str(get_masked_heads)
                )
            )
        )
    else:
        get_masked_heads = get_masked_heads
    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(self, keep=None, n_layers=1, n_heads=1, init_dict=None, init_str=None):
        """Constructor of the class. Can be use in three ways :
        - __init__ (keep=k) or __init__ (n_layers=L, n_heads=H) for an all-keep mask
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            keep = init_dict.get("keep", keep)
        if keep is None:
            keep = ones((n_layers, n_heads), dtype=bool)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.keep = keep

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        return "keep = " + str(self.keep.astype(int).tolist())

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""

        HeadMask_dict = dict()
        HeadMask_dict["keep"] = self.keep.tolist()
        # The class name is added to the dict for deserialisation purpose
        HeadMask_dict["__class__"] = "HeadMask"
        return HeadMask_dict

    def check(self, config):
        """Check that the mask matches the geometry of a ModelConfig"""
        check_dimensions(self.keep, (config.n_layers, config.n_heads), "HeadMask.keep")

    def _get_keep(self):
        """getter of keep"""
        return self._keep

    def _set_keep(self, value):
        """setter of keep"""
        if isinstance(value, list):
            value = array(value, dtype=bool)
        check_var("keep", value, "ndarray")
        if value.ndim != 2:
            raise CheckDimError("HeadMask.keep must be a L x H matrix")
        self._keep = value.astype(bool)

    keep = property(
        fget=_get_keep,
        fset=_set_keep,
        doc=u"""True for the heads kept, False for the masked ones

        :Type: ndarray
        """,
    )

    def _get_n_layers(self):
        """getter of n_layers"""
        return self._keep.shape[0]

    n_layers = property(fget=_get_n_layers, doc=u"""Number of layers L""")

    def _get_n_heads(self):
        """getter of n_heads"""
        return self._keep.shape[1]

    n_heads = property(fget=_get_n_heads, doc=u"""Number of heads H per layer""")

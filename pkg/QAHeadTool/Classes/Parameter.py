# -*- coding: utf-8 -*-
"""A named trainable weight with its gradient buffer"""

from numpy import asarray, float64, zeros_like

from ._check import check_var, check_dimensions
from ._frozen import FrozenClass


class Parameter(FrozenClass):
    """value and grad always share the same shape"""

    VERSION = 1

    def __init__(self, name="", value=None, grad=None, init_dict=None):
        """Constructor of the class. Can be use in two ways :
        - __init__ (name="w", value=v) the grad starts at zero
        - __init__ (init_dict = d) d must be a dictionary with property names as keys"""

        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            name = init_dict.get("name", name)
            value = init_dict.get("value", value)
            grad = init_dict.get("grad", grad)
        self.parent = None
        self.name = name
        self.value = value
        self.grad = zeros_like(self.value) if grad is None else grad

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        return self.name + " " + str(self.value.shape)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "name": self.name,
            "value": self.value.tolist(),
            "grad": self.grad.tolist(),
            "__class__": "Parameter",
        }

    def zero_grad(self):
        """Reset the gradient buffer to exact zeros"""
        self.grad[...] = 0.0

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
        doc=u"""Unique tensor name (checkpoint key)

        :Type: str
        """,
    )

    def _get_value(self):
        """getter of value"""
        return self._value

    def _set_value(self, value):
        """setter of value"""
        self._value = asarray(value, dtype=float64)

    value = property(
        fget=_get_value,
        fset=_set_value,
        doc=u"""Weight values (float64)

        :Type: ndarray
        """,
    )

    def _get_grad(self):
        """getter of grad"""
        return self._grad

    def _set_grad(self, value):
        """setter of grad"""
        value = asarray(value, dtype=float64)
        check_dimensions(value, self._value.shape, "grad of " + self._name)
        self._grad = value

    grad = property(
        fget=_get_grad,
        fset=_set_grad,
        doc=u"""Accumulated gradient of the loss (same shape as value)

        :Type: ndarray
        """,
    )

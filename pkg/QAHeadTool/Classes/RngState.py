# -*- coding: utf-8 -*-
"""Seed and stream path of a counter-based random generator

Method code available in QAHeadTool/Methods/RngState
"""

from ._check import CheckError, check_var, check_choice, raise_
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ..Functions.Numerics.rng import ALGORITHM
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.RngState.get_generator import get_generator
except ImportError as error:
    get_generator = error

try:
    from ..Methods.RngState.spawn import spawn
except ImportError as error:
    spawn = error


class RngState(FrozenClass):
    """Equal (seed, stream) give the same draws on every platform"""

    VERSION = 1

    # cf Methods.RngState.get_generator
    if isinstance(get_generator, ImportError):
        get_generator = property(
            fget=lambda x: raise_(
                ImportError("Can't use RngState method get_generator: " + str(get_generator))
            )
        )
    else:
        get_generator = get_generator
    # cf Methods.RngState.spawn
    if isinstance(spawn, ImportError):
        spawn = property(
            fget=lambda x: raise_(ImportError("Can't use RngState method spawn: " + str(spawn)))
        )
    else:
        spawn = spawn
    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(self, seed=0, stream=None, algorithm=ALGORITHM, init_dict=None, init_str=None):
        """Constructor of the class. Can be use in three ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            seed = init_dict.get("seed", seed)
            stream = init_dict.get("stream", stream)
            algorithm = init_dict.get("algorithm", algorithm)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.seed = seed
        self.stream = list() if stream is None else list(stream)
        self.algorithm = algorithm

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        return self.algorithm + " seed=" + str(self.seed) + " stream=" + str(self.stream)

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "seed": self.seed,
            "stream": list(self.stream),
            "algorithm": self.algorithm,
            "__class__": "RngState",
        }

    def _get_seed(self):
        """getter of seed"""
        return self._seed

    def _set_seed(self, value):
        """setter of seed"""
        check_var("seed", value, "int", Vmin=0, Vmax=2**64 - 1)
        self._seed = int(value)

    seed = property(
        fget=_get_seed,
        fset=_set_seed,
        doc=u"""64-bit unsigned seed

        :Type: int
        :min: 0
        :max: 2**64 - 1
        """,
    )

    def _get_stream(self):
        """getter of stream"""
        return self._stream

    def _set_stream(self, value):
        """setter of stream"""
        check_var("stream", value, "list")
        if any(not isinstance(index, int) or index < 0 for index in value):
            raise CheckError("RngState.stream must hold non negative int")
        self._stream = value

    stream = property(
        fget=_get_stream,
        fset=_set_stream,
        doc=u"""Sub-stream path below the seed (empty for the root stream)

        :Type: list
        """,
    )

    def _get_algorithm(self):
        """getter of algorithm"""
        return self._algorithm

    def _set_algorithm(self, value):
        """setter of algorithm"""
        check_choice("algorithm", value, [ALGORITHM])
        self._algorithm = value

    algorithm = property(
        fget=_get_algorithm,
        fset=_set_algorithm,
        doc=u"""Bit generator (fixed)

        :Type: str
        """,
    )

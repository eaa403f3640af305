# -*- coding: utf-8 -*-
"""Fully resolved options of one command line run

Method code available in QAHeadTool/Methods/RunConfig
"""

from ._check import check_var, raise_
from ..Functions.save import save
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.RunConfig.resolve import resolve
except ImportError as error:
    resolve = error

try:
    from ..Methods.RunConfig.get_hyperparameters import get_hyperparameters
except ImportError as error:
    get_hyperparameters = error


class RunConfig(FrozenClass):
    """options hold every argument of the command, flags > config file >
    defaults"""

    VERSION = 1

    # cf Methods.RunConfig.resolve
    if isinstance(resolve, ImportError):
        resolve = property(
            fget=lambda x: raise_(ImportError("Can't use RunConfig method resolve: " + str(resolve)))
        )
    else:
        resolve = classmethod(resolve)
    # cf Methods.RunConfig.get_hyperparameters
    if isinstance(get_hyperparameters, ImportError):
        get_hyperparameters = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use RunConfig method get_hyperparameters: "
                    + str(get_hyperparameters)
                )
            )
        )
    else:
        get_hyperparameters = get_hyperparameters
    # save method is available in all object
    save = save

    def __init__(self, command="", options=None, config_file="", init_dict=None, init_str=None):
        """Constructor of the class. Can be use in three ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            command = init_dict.get("command", command)
            options = init_dict.get("options", options)
            config_file = init_dict.get("config_file", config_file)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.command = command
        self.options = dict() if options is None else options
        self.config_file = config_file

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""
        options = ", ".join(
            key + "=" + repr(value) for key, value in sorted(self.options.items())
        )
        return self.command + ": " + options

    def __getitem__(self, key):
        return self.options[key]

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""
        return {
            "command": self.command,
            "options": dict(self.options),
            "config_file": self.config_file,
            "__class__": "RunConfig",
        }

    def _get_command(self):
        """getter of command"""
        return self._command

    def _set_command(self, value):
        """setter of command"""
        check_var("command", value, "str")
        self._command = value

    command = property(
        fget=_get_command,
        fset=_set_command,
        doc=u"""Name of the sub-command

        :Type: str
        """,
    )

    def _get_options(self):
        """getter of options"""
        return self._options

    def _set_options(self, value):
        """setter of options"""
        check_var("options", value, "dict")
        self._options = value

    options = property(
        fget=_get_options,
        fset=_set_options,
        doc=u"""Resolved option values by name

        :Type: dict
        """,
    )

    def _get_config_file(self):
        """getter of config_file"""
        return self._config_file

    def _set_config_file(self, value):
        """setter of config_file"""
        check_var("config_file", value, "str")
        self._config_file = value

    config_file = property(
        fget=_get_config_file,
        fset=_set_config_file,
        doc=u"""JSON file the options were read from ("" if none)

        :Type: str
        """,
    )

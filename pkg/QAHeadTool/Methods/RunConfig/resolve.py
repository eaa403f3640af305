from QAHeadTool.Functions import UsageError
from QAHeadTool.Functions.Load.load_json import load_json


def resolve(cls, command, flags, defaults, config_file=None):
    """Merge the options of a run, flags > config file > defaults
    Parameters
    ----------
    cls: type
        RunConfig
    command: str
        name of the sub-command
    flags: dict
        command line values (None when the flag is absent)
    defaults: dict
        value of every option of the command
    config_file: str
        JSON file holding a flat dict of options (None: no file)
    Returns
    -------
    run_config: RunConfig
        resolved options, restricted to the keys of defaults and flags
    """
    options = dict(defaults)
    if config_file:
        file_options = load_json(config_file)[1]
        if not isinstance(file_options, dict):
            raise UsageError(config_file + " must hold a JSON object")
        file_options.pop("__class__", None)
        unknown = sorted(set(file_options) - set(defaults) - set(flags))
        if unknown:
            raise UsageError(
                "Unknown option(s) " + ", ".join(unknown) + " for " + command
            )
        options.update(file_options)
    options.update({key: value for key, value in flags.items() if value is not None})
    return cls(command=command, options=options, config_file=config_file or "")

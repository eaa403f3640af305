def get_hyperparameters(self):
    """Returns the Hyperparameters named in the options (keys of Hyperparameters.as_dict)
    Parameters
    ----------
    self: RunConfig
        a RunConfig object
    Returns
    -------
    hp: Hyperparameters
        training settings, unset keys at the Hyperparameters defaults
    """
    # Dynamic import to avoid loop
    module = __import__("QAHeadTool.Classes.Hyperparameters", fromlist=["Hyperparameters"])
    Hyperparameters = getattr(module, "Hyperparameters")
    keys = Hyperparameters().as_dict()
    init_dict = {key: value for key, value in self.options.items() if key in keys}
    init_dict.pop("__class__", None)
    return Hyperparameters(init_dict=init_dict)

def copy(self, **kwargs):
    """Return a copy of the object rebuilt from its dict, with the given
    properties overridden (the setters check the new values)"""
    init_dict = self.as_dict()
    for key in kwargs:
        if key not in init_dict:
            raise AttributeError(
                type(self).__name__ + " has no property " + repr(key)
            )
        init_dict[key] = kwargs[key]
    return type(self)(init_dict=init_dict)

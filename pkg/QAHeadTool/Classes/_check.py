from numpy import array, asarray, bool_, floating, integer, ndarray


def set_array(obj, prop, value, dtype=float):
    """Set an ndarray property that can be given as None or a list
    Parameters
    ----------
    obj : FrozenClass
        Object to set
    prop : str
        Name of the (private) property to set
    value : ndarray, list or None
        Value to set
    dtype : type
        dtype of the stored array
    """
    if value is None:
        setattr(obj, prop, None)
        return
    if isinstance(value, list):
        value = array(value, dtype=dtype)
    check_var(prop.lstrip("_"), value, "ndarray")
    setattr(obj, prop, asarray(value, dtype=dtype))


def check_var(var_name, value, expect_type, Vmin=None, Vmax=None):
    """Check if var_name can be set with value
    Parameters
    ----------
    var_name : str
        The name of the property to set
    value : ?
        The value to check
    expect_type : str
        The name of the expected type for value ("int", "float", "str",
        "bool", "ndarray", "list", "dict", "[ClassName]" or "ClassName")
    Vmin : float
        Value must be >=Vmin (None if the property has no Vmin)
    Vmax : float
        Value must be <=Vmax (None if the property has no Vmax)
    Raises
    ------
    CheckError
        The value is incorrect for var_name
    """
    if value is None:
        return
    type_value = type(value).__name__
    check_type(var_name, value, expect_type, type_value)
    if Vmin is not None:
        check_min(var_name, value, Vmin)
    if Vmax is not None:
        check_max(var_name, value, Vmax)


def _is_int(value):
    return isinstance(value, (int, integer)) and not isinstance(value, (bool, bool_))


def _inherits(value, class_name):
    """True if value is an instance of a class named class_name (or a subclass)"""
    return any(cls.__name__ == class_name for cls in type(value).__mro__)


def check_type(var_name, value, expect_type, type_value):
    """Check if value has the expected type for var_name
    Raises
    ------
    CheckTypeError
        Value has a wrong type for var_name
    """
    if expect_type == "float":  # float variable can take int value
        is_ok = _is_int(value) or isinstance(value, (float, floating))
    elif expect_type == "int":
        is_ok = _is_int(value) or (
            isinstance(value, (float, floating)) and value % 1 == 0
        )
    elif expect_type == "bool":
        is_ok = isinstance(value, (bool, bool_))
    elif expect_type == "str":
        is_ok = isinstance(value, str)
    elif expect_type == "ndarray":
        is_ok = isinstance(value, ndarray)
    elif expect_type == "list":
        is_ok = isinstance(value, list)
    elif expect_type == "dict":
        is_ok = isinstance(value, dict)
    elif expect_type[0] == "[" and expect_type[-1] == "]":  # List of type
        if not isinstance(value, list):
            raise CheckTypeError(
                "For " + var_name + " : List expected, " + type_value + " given"
            )
        for element in value:
            if not _inherits(element, expect_type[1:-1]):
                raise CheckTypeError(
                    "For "
                    + var_name
                    + " : "
                    + expect_type[1:-1]
                    + " expected, "
                    + type(element).__name__
                    + " given"
                )
        return
    else:
        is_ok = _inherits(value, expect_type)
    if not is_ok:
        raise CheckTypeError(
            "For " + var_name + " : " + expect_type + " expected, " + type_value + " given"
        )


def check_min(var_name, value, Vmin):
    """Check if value is greater than the min of var_name
    Raises
    ------
    CheckMinError
        value is too small for var_name
    """
    if isinstance(value, ndarray):
        if value.size > 0 and value.min() < Vmin:
            raise CheckMinError(
                var_name + " must have its elements >= " + str(Vmin)
            )
    elif value < Vmin:
        raise CheckMinError(
            var_name + " must be >= " + str(Vmin) + ", " + str(value) + " given"
        )


def check_max(var_name, value, Vmax):
    """Check if value is less than the max of var_name
    Raises
    ------
    CheckMaxError
        value is too large for var_name
    """
    if isinstance(value, ndarray):
        if value.size > 0 and value.max() > Vmax:
            raise CheckMaxError(var_name + " must have its elements <= " + str(Vmax))
    elif value > Vmax:
        raise CheckMaxError(
            var_name + " must be <= " + str(Vmax) + ", " + str(value) + " given"
        )


def check_choice(var_name, value, choices):
    """Check if value is one of the allowed choices
    Raises
    ------
    CheckChoiceError
        value is not in choices
    """
    if value is not None and value not in choices:
        raise CheckChoiceError(
            "For "
            + var_name
            + " : one of "
            + str(list(choices))
            + " expected, "
            + repr(value)
            + " given"
        )


def check_dimensions(values, shape, var_name="values"):
    """Check if an array has the expected shape
    Raises
    ------
    CheckDimError
        Dimensions of the array and of the expected shape do not match
    """
    if values is not None and tuple(values.shape) != tuple(shape):
        raise CheckDimError(
            "Dimensions of "
            + var_name
            + " ("
            + str(tuple(values.shape))
            + ") and expected shape ("
            + str(tuple(shape))
            + ") do not match"
        )


def raise_(ex):
    """Function to raise an exeption for the method import lambda"""
    raise ex


class CheckError(Exception):
    """ """

    pass


class CheckDimError(CheckError):
    """ """

    pass


class CheckMinError(CheckError):
    """ """

    pass


class CheckMaxError(CheckError):
    """ """

    pass


class CheckTypeError(CheckError):
    """ """

    pass


class CheckChoiceError(CheckError):
    """ """

    pass

from QAHeadTool.Functions.Load.load_json import load_json
from QAHeadTool.Functions.Load.import_class import import_class


def load_init_dict(file_path):
    """load the init_dict from a json file"""
    if file_path.endswith("json"):
        return load_json(file_path)
    else:
        raise LoadWrongTypeError("Load error: Only json format supported: " + file_path)


def load(file_path):
    """Load a QAHeadTool object from a json file

    Parameters
    ----------
    file_path: str
        path to the file to load
    """
    file_path, init_dict = load_init_dict(file_path)

    # Check that loaded data are of type dict
    if not isinstance(init_dict, dict):
        raise LoadWrongTypeError(
            'Loaded file is of type "'
            + type(init_dict).__name__
            + '", type "dict" expected.'
        )
    # Check that the dictionay has a "__class__" key
    if "__class__" not in init_dict:
        raise LoadWrongDictClassError('Key "__class__" missing in loaded file')

    class_obj = import_class("QAHeadTool.Classes", init_dict["__class__"])
    return class_obj(init_dict=init_dict)


class LoadWrongDictClassError(Exception):
    """ """

    pass


class LoadWrongTypeError(Exception):
    """ """

    pass

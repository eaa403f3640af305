from json import dump
from os import makedirs
from os.path import basename, dirname, isdir, join

import numpy as np


def fix_file_name(save_path, obj):
    """Return a .json file path (in save_path if it is a folder)"""
    if isdir(save_path) or not save_path:
        file_path = join(save_path, type(obj).__name__ + ".json")
    elif ".json" != basename(save_path)[-5:]:
        file_path = save_path + ".json"
    else:
        file_path = save_path
    return file_path


def has_as_dict(obj):
    """Check if object has 'as_dict' method."""
    return hasattr(obj, "as_dict") and callable(getattr(obj, "as_dict", None))


def build_data(obj):
    """
    Build a json serializable data structure of lists, dicts and QAHeadTool objects.
    Parameters
    ----------
    obj :
        An object to serialize

    Returns
    -------
    data :
        A serializable data structure
    """
    if isinstance(obj, (list, tuple)):
        return [build_data(elem) for elem in obj]
    if isinstance(obj, dict):
        return {str(key): build_data(value) for key, value in obj.items()}
    if has_as_dict(obj):
        return obj.as_dict()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (bool, float, int, str)) or obj is None:
        return obj
    return None


def save_json(data, file_path):
    """Write data as an indented json file with sorted keys"""
    folder = dirname(file_path)
    if folder:
        makedirs(folder, exist_ok=True)
    with open(file_path, "w") as json_file:
        dump(
            build_data(data),
            json_file,
            sort_keys=True,
            indent=4,
            separators=(",", ": "),
            allow_nan=False,
        )
        json_file.write("\n")


def save(self, save_path=""):
    """Save the object to the save_path
    Parameters
    ----------
    self :
        A QAHeadTool object
    save_path: str
        path to the folder or file to save the object
    """
    file_path = fix_file_name(save_path, self)
    save_json(self, file_path)
    return file_path

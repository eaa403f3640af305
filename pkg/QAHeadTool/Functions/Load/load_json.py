from json import JSONDecodeError, load as jload
from os.path import isfile


def load_json(file_path):
    """Load a json file

    Parameters
    ----------
    file_path: str
        path to the file to load

    Returns
    -------
    file_path: str
        path to the loaded file
    json_data: json decoded data type
        data of the json file
    """
    if not isfile(file_path):
        raise LoadMissingFileError(str(file_path) + " doesn't exist")

    with open(file_path, "r", encoding="utf-8") as load_file:
        try:
            json_data = jload(load_file)
        except JSONDecodeError as error:
            raise LoadJSONError(str(file_path) + " is not valid json: " + str(error))

    return file_path, json_data


class LoadMissingFileError(Exception):
    """ """

    pass


class LoadJSONError(Exception):
    """ """

    pass

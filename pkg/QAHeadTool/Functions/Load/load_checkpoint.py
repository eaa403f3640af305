from os.path import isdir, isfile, join

import numpy as np

from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.Parameter import Parameter
from QAHeadTool.Classes.Parameters import Parameters
from QAHeadTool.Functions import CheckpointError
from QAHeadTool.Functions.Load.load_json import load_json
from QAHeadTool.Functions.Model import parameter_shapes
from QAHeadTool.Methods.Parameters.save import FORMAT_VERSION, MANIFEST_NAME, WEIGHTS_NAME


def load_checkpoint(ckpt_path):
    """Read a checkpoint directory written by Parameters.save

    Parameters
    ----------
    ckpt_path : str
        checkpoint directory

    Returns
    -------
    params : Parameters
        weights with their ModelConfig and seed
    """
    manifest_path = join(ckpt_path, MANIFEST_NAME)
    weights_path = join(ckpt_path, WEIGHTS_NAME)
    if not isdir(ckpt_path) or not isfile(manifest_path) or not isfile(weights_path):
        raise CheckpointError(str(ckpt_path) + " is not a checkpoint directory")
    _, manifest = load_json(manifest_path)
    if manifest.get("format_version") != FORMAT_VERSION:
        raise CheckpointError(
            "Unsupported checkpoint format " + str(manifest.get("format_version"))
        )
    config = ModelConfig(init_dict=manifest["config"])
    raw = np.fromfile(weights_path, dtype="<f8")
    expected = dict(parameter_shapes(config))
    tensors = list()
    for entry in manifest["tensors"]:
        shape = tuple(entry["shape"])
        if expected.get(entry["name"]) != shape:
            raise CheckpointError(
                "Tensor " + entry["name"] + " " + str(shape) + " does not match the config"
            )
        start = entry["offset"] // 8
        size = int(np.prod(shape))
        if start + size > raw.size:
            raise CheckpointError("weights.bin is shorter than the manifest index")
        value = raw[start : start + size].astype(np.float64).reshape(shape)
        tensors.append(Parameter(name=entry["name"], value=value))
    if len(tensors) != len(expected):
        raise CheckpointError("Checkpoint misses tensors of its config")
    return Parameters(config=config, tensors=tensors, seed=manifest.get("seed", 0))

from logging import getLogger
from os import makedirs
from os.path import join

import numpy as np

from QAHeadTool.Functions.save import save_json

FORMAT_VERSION = 1
MANIFEST_NAME = "manifest.json"
WEIGHTS_NAME = "weights.bin"


def save(self, save_path):
    """Write the weights as a checkpoint directory
    save_path/manifest.json holds the ModelConfig, the training seed and the
    name -> shape -> byte offset index; save_path/weights.bin holds the
    tensors as little-endian float64 in manifest order.
    Parameters
    ----------
    self: Parameters
        a Parameters object
    save_path: str
        checkpoint directory (created if needed)
    Returns
    -------
    save_path: str
        checkpoint directory
    """
    makedirs(save_path, exist_ok=True)
    index = list()
    offset = 0
    with open(join(save_path, WEIGHTS_NAME), "wb") as weights_file:
        for param in self.tensors.values():
            raw = np.ascontiguousarray(param.value, dtype="<f8").tobytes()
            weights_file.write(raw)
            index.append(
                {"name": param.name, "shape": list(param.value.shape), "offset": offset}
            )
            offset += len(raw)
    manifest = {
        "format_version": FORMAT_VERSION,
        "config": self.config.as_dict(),
        "seed": self.seed,
        "dtype": "<f8",
        "tensors": index,
    }
    save_json(manifest, join(save_path, MANIFEST_NAME))
    getLogger(__name__).debug("checkpoint written to %s (%d bytes)", save_path, offset)
    return save_path

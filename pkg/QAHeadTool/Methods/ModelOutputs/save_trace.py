from h5py import File

from QAHeadTool.Functions import UsageError


def save_trace(self, file_path):
    """Write the attention matrices in an hdf5 file
    One dataset per head, named layer_{l}/head_{h}, plus the output
    distributions at the root.
    Parameters
    ----------
    self: ModelOutputs
        outputs of a traced forward call
    file_path: str
        path of the .h5 file
    Returns
    -------
    file_path: str
        path of the written file
    """
    if self.trace is None:
        raise UsageError("No attention trace: call forward with trace=True")
    with File(file_path, "w") as h5_file:
        h5_file.attrs["categories"] = ",".join(self.categories)
        h5_file.attrs["context_start"] = self.context_start
        h5_file.attrs["context_end"] = self.context_end
        h5_file.create_dataset("f_a", data=self.f_a)
        if self.f_s is not None:
            h5_file.create_dataset("f_s", data=self.f_s)
            h5_file.create_dataset("f_e", data=self.f_e)
        for layer, probs in enumerate(self.trace):
            group = h5_file.create_group("layer_" + str(layer))
            for head in range(probs.shape[0]):
                group.create_dataset("head_" + str(head), data=probs[head])
    return file_path

from QAHeadTool.Functions import UsageError


def train_dev_split(self, dev_fraction, rng):
    """Split the samples in two disjoint datasets
    Parameters
    ----------
    self: Dataset
        a Dataset object
    dev_fraction: float
        share of the samples sent to the dev split (0 < dev_fraction < 1)
    rng: numpy.random.Generator
        stream drawing the split
    Returns
    -------
    train: Dataset
        train split
    dev: Dataset
        dev split
    """
    if not 0 < dev_fraction < 1:
        raise UsageError("dev_fraction must be in ]0, 1[, " + str(dev_fraction) + " given")
    order = rng.permutation(len(self.samples))
    n_dev = max(1, int(round(dev_fraction * len(self.samples))))
    if n_dev >= len(self.samples):
        raise UsageError("Not enough samples to split " + self.get_id())
    dev_index = sorted(order[:n_dev])
    train_index = sorted(order[n_dev:])
    datasets = list()
    for split, indices in [("train", train_index), ("dev", dev_index)]:
        datasets.append(
            type(self)(
                samples=[self.samples[index] for index in indices],
                split=split,
                provenance=self.provenance,
                name=self.name + ("-" + split if self.name else ""),
            )
        )
    return datasets[0], datasets[1]

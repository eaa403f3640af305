from QAHeadTool.Functions import UsageError


def mix_and_shuffle(self, other, rng):
    """Returns the shuffled union of two datasets of the same split
    No resampling nor rebalancing: every sample of both datasets is kept once,
    in the order of a Fisher-Yates permutation drawn from rng.
    Parameters
    ----------
    self: Dataset
        first dataset
    other: Dataset
        second dataset
    rng: numpy.random.Generator
        shuffling stream
    Returns
    -------
    mixed: Dataset
        dataset of provenance "mixed"
    """
    if self.split != other.split:
        raise UsageError(
            "Cannot mix a " + self.split + " split with a " + other.split + " split"
        )
    samples = self.samples + other.samples
    order = rng.permutation(len(samples))
    self.get_logger().info(
        "mixed %s (%d) and %s (%d)",
        self.get_id(),
        len(self),
        other.get_id(),
        len(other),
    )
    return type(self)(
        samples=[samples[index] for index in order],
        split=self.split,
        provenance="mixed",
        n_truncated=self.n_truncated + other.n_truncated,
        name=self.get_id() + "+" + other.get_id(),
    )

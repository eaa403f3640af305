from math import ceil


def get_total_steps(self, n_samples):
    """Returns the number of optimizer steps of a run (last batch kept)
    Parameters
    ----------
    self: Hyperparameters
        a Hyperparameters object
    n_samples: int
        size of the training set
    Returns
    -------
    total_steps: int
        epochs x batches per epoch
    """
    return self.epochs * int(ceil(n_samples / self.batch_size))

def count_heads(self):
    """Returns the number of attention heads of the encoder
    Parameters
    ----------
    self: ModelConfig
        a ModelConfig object
    Returns
    -------
    n_heads_total: int
        L x H
    """
    return self.n_layers * self.n_heads

def top_heads(self, k=None):
    """Returns the k most important heads
    Parameters
    ----------
    self: ImportanceMatrix
        an ImportanceMatrix object
    k: int
        number of heads (None for all L x H heads)
    Returns
    -------
    heads: list
        (layer, head, delta) by ascending delta, ties by (layer, head)
    """
    n_layers, n_heads = self.shape
    heads = [
        (layer, head, float(self.deltas[layer, head]))
        for layer in range(n_layers)
        for head in range(n_heads)
    ]
    heads.sort(key=lambda entry: (entry[2], entry[0], entry[1]))
    if k is None:
        return heads
    return heads[:k]

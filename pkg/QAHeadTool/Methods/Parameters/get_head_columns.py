def get_head_columns(self, layer, head):
    """Returns the query/key/value weight and bias slices owned by one head
    Parameters
    ----------
    self: Parameters
        a Parameters object
    layer: int
        layer index
    head: int
        head index in the layer
    Returns
    -------
    owned: list
        list of (tensor name, index) such that tensors[name].value[index] is
        the part of the projection producing that head's q, k or v
    """
    head_dim = self.config.head_dim
    cols = slice(head * head_dim, (head + 1) * head_dim)
    prefix = "layers." + str(layer) + ".attention."
    owned = list()
    for proj in ["query", "key", "value"]:
        owned.append((prefix + proj + ".weight", (slice(None), cols)))
        owned.append((prefix + proj + ".bias", (cols,)))
    return owned

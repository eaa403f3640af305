from numpy import ones


def leave_one_out(cls, n_layers, n_heads, layer, head):
    """Build the HeadMask masking exactly one head
    Parameters
    ----------
    cls: type
        HeadMask
    n_layers: int
        number of layers L
    n_heads: int
        number of heads H per layer
    layer: int
        layer of the masked head
    head: int
        index of the masked head in its layer
    Returns
    -------
    mask: HeadMask
        mask with a single False entry
    """
    keep = ones((n_layers, n_heads), dtype=bool)
    keep[layer, head] = False
    return cls(keep=keep)

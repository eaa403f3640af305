from numpy import ones

from QAHeadTool.Functions import UsageError


def from_string(cls, text, n_layers, n_heads):
    """Build a HeadMask from a "layer:head,layer:head" list of masked heads
    Parameters
    ----------
    cls: type
        HeadMask
    text: str
        comma separated layer:head pairs ("" keeps every head)
    n_layers: int
        number of layers L of the model
    n_heads: int
        number of heads H per layer
    Returns
    -------
    mask: HeadMask
        mask with keep False on the listed heads
    Raises
    ------
    UsageError
        an entry is malformed or outside the L x H geometry
    """
    keep = ones((n_layers, n_heads), dtype=bool)
    for entry in text.split(","):
        entry = entry.strip()
        if entry == "":
            continue
        parts = entry.split(":")
        try:
            layer, head = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise UsageError('Mask entry "' + entry + '" is not of the form layer:head')
        if len(parts) != 2 or not (0 <= layer < n_layers and 0 <= head < n_heads):
            raise UsageError(
                'Mask entry "'
                + entry
                + '" is outside the '
                + str(n_layers)
                + "x"
                + str(n_heads)
                + " geometry"
            )
        keep[layer, head] = False
    return cls(keep=keep)

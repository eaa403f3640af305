from numpy import argwhere


def get_masked_heads(self):
    """Returns the (layer, head) pairs of the masked heads, in lexicographic order"""
    return [(int(layer), int(head)) for layer, head in argwhere(~self.keep)]

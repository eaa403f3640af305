from QAHeadTool.Functions.Numerics.rng import make_rng


def get_generator(self):
    """Returns a fresh numpy Generator positioned at the start of the stream
    Parameters
    ----------
    self: RngState
        a RngState object
    Returns
    -------
    rng: numpy.random.Generator
        Philox generator keyed by (seed, *stream)
    """
    return make_rng(self.seed, stream=tuple(self.stream))

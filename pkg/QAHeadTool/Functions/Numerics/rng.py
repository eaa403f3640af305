from numpy.random import Generator, Philox, SeedSequence

ALGORITHM = "philox4x64"


def make_rng(seed, stream=()):
    """Build a Philox counter-based generator keyed by (seed, *stream)

    Parameters
    ----------
    seed : int
        64-bit unsigned seed
    stream : tuple of int
        Sub-stream identifiers (epoch, worker...), each draws independently

    Returns
    -------
    rng : numpy.random.Generator
        Generator with a platform independent draw sequence
    """
    if isinstance(stream, int):
        stream = (stream,)
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(s) for s in stream]
    return Generator(Philox(SeedSequence(entropy)))

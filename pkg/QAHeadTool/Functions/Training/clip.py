import numpy as np

from QAHeadTool.Functions import NumericError


def global_norm(grads):
    """L2 norm of the concatenation of every gradient"""
    return float(np.sqrt(sum(float(np.sum(grad * grad)) for grad in grads)))


def clip_global_norm(grads, max_norm):
    """Rescale the gradients in place when their global norm exceeds max_norm

    Parameters
    ----------
    grads : list
        gradient ndarrays (modified in place)
    max_norm : float
        threshold of the global L2 norm

    Returns
    -------
    factor : float
        scale applied to every gradient (1.0 when unchanged)
    """
    norm = global_norm(grads)
    if not np.isfinite(norm):
        raise NumericError("Non finite gradient norm")
    if norm <= max_norm:
        return 1.0
    factor = max_norm / norm
    for grad in grads:
        grad *= factor
    return factor

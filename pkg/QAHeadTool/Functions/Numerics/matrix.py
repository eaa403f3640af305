from logging import getLogger

import numpy as np

from QAHeadTool.Functions import DimensionError, InvalidSupportError, NumericError

# Lower bound applied to the target probability inside cross_entropy
PROBA_FLOOR = 1e-12

logger = getLogger(__name__)


def as_matrix(values, name="matrix"):
    """Return values as a 2D float64 ndarray

    Parameters
    ----------
    values : array-like
        rows x cols values
    name : str
        Name used in error messages

    Returns
    -------
    matrix : ndarray
        2D float64 array
    """
    matrix = np.asarray(values, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix[None, :]
    if matrix.ndim != 2:
        raise DimensionError(
            name + " must be 2D, shape " + str(matrix.shape) + " given"
        )
    return matrix


def check_finite(values, where="matrix"):
    """Raise a NumericError if values holds a NaN or an Inf"""
    if not np.all(np.isfinite(values)):
        raise NumericError("Non finite value found in " + where)


def matmul(a, b):
    """Matrix product of a (n x k) by b (k x m)

    Parameters
    ----------
    a : ndarray
        left matrix
    b : ndarray
        right matrix

    Returns
    -------
    c : ndarray
        n x m product
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(
            "Cannot multiply a "
            + "x".join(str(s) for s in a.shape)
            + " matrix by a "
            + "x".join(str(s) for s in b.shape)
            + " matrix"
        )
    c = a @ b
    check_finite(c, "matmul result")
    return c


def softmax_rows(m, support=None):
    """Row-wise softmax restricted to the supported positions

    Unsupported positions are exactly 0. The row maximum over the support is
    subtracted before exponentiation.

    Parameters
    ----------
    m : ndarray
        rows x cols scores
    support : ndarray
        rows x cols boolean mask (None for full support)

    Returns
    -------
    p : ndarray
        rows x cols probabilities
    """
    m = np.asarray(m, dtype=np.float64)
    if support is None:
        support = np.ones(m.shape, dtype=bool)
    else:
        support = np.broadcast_to(np.asarray(support, dtype=bool), m.shape)
    if not np.all(np.any(support, axis=-1)):
        raise InvalidSupportError("softmax row with an empty support")
    shifted = np.where(support, m, -np.inf)
    shifted = shifted - np.max(shifted, axis=-1, keepdims=True)
    e = np.where(support, np.exp(shifted), 0.0)
    p = e / np.sum(e, axis=-1, keepdims=True)
    check_finite(p, "softmax result")
    return p


def cross_entropy(predicted, target, return_flag=False):
    """Cross-entropy between a probability vector and a one-hot target

    Parameters
    ----------
    predicted : ndarray
        probability vector
    target : ndarray or int
        one-hot vector (or the index of the hot entry)
    return_flag : bool
        True to also return whether the probability floor was applied

    Returns
    -------
    loss : float
        -log(predicted[target index])
    is_floored : bool
        True if predicted[target index] was below PROBA_FLOOR
    """
    predicted = np.asarray(predicted, dtype=np.float64).ravel()
    if np.isscalar(target) or np.ndim(target) == 0:
        index = int(target)
    else:
        target = np.asarray(target).ravel()
        if target.shape != predicted.shape:
            raise DimensionError(
                "predicted "
                + str(predicted.shape)
                + " and target "
                + str(target.shape)
                + " do not match"
            )
        index = int(np.argmax(target))
    proba = predicted[index]
    is_floored = bool(proba < PROBA_FLOOR)
    if is_floored:
        logger.warning(
            "cross_entropy: target probability %r clamped to %r", proba, PROBA_FLOOR
        )
        proba = PROBA_FLOOR
    loss = -np.log(proba)
    if return_flag:
        return loss, is_floored
    return loss

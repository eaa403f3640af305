"""Reverse-mode differentiation over float64 ndarrays

Each operation returns a Tensor remembering its parents and a closure that
pushes the output gradient back to them. Leaves built from a Parameter add
their gradient into Parameter.grad when backward() reaches them.
"""
import numpy as np
from scipy.special import erf

from QAHeadTool.Functions import DimensionError, InvalidSupportError
from QAHeadTool.Functions.Numerics.matrix import PROBA_FLOOR

SQRT_2 = np.sqrt(2.0)
INV_SQRT_2PI = 1.0 / np.sqrt(2.0 * np.pi)


class Tensor(object):
    """Node of the differentiation tape"""

    __slots__ = ("value", "grad", "parents", "backward_fn", "param")

    def __init__(self, value, parents=(), backward_fn=None, param=None):
        self.value = value
        self.grad = None
        self.parents = parents
        self.backward_fn = backward_fn
        self.param = param

    @property
    def shape(self):
        return self.value.shape

    @classmethod
    def from_parameter(cls, param):
        """Leaf whose gradient is accumulated into param.grad"""
        return cls(param.value, param=param)

    def accumulate(self, grad):
        if self.grad is None:
            self.grad = np.array(grad, dtype=np.float64)
        else:
            self.grad += grad

    def backward(self, grad=None):
        """Propagate d(self)/d(node) to every node of the tape

        Parameters
        ----------
        grad : ndarray
            Seed gradient (1.0 for a scalar loss)
        """
        order = []
        seen = set()
        stack = [(self, False)]
        while stack:
            node, is_expanded = stack.pop()
            if is_expanded:
                order.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for parent in node.parents:
                if id(parent) not in seen:
                    stack.append((parent, False))

        self.accumulate(np.ones_like(self.value) if grad is None else grad)
        for node in reversed(order):
            if node.grad is None:
                continue
            if node.backward_fn is not None:
                node.backward_fn(node.grad)
            elif node.param is not None:
                node.param.grad += node.grad


def constant(value):
    """Tensor without gradient"""
    return Tensor(np.asarray(value, dtype=np.float64))


def _unbroadcast(grad, shape):
    """Sum grad over the axes that were broadcast to reach grad.shape"""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def add(a, b):
    out = Tensor(a.value + b.value, (a, b))

    def backward_fn(grad):
        a.accumulate(_unbroadcast(grad, a.shape))
        b.accumulate(_unbroadcast(grad, b.shape))

    out.backward_fn = backward_fn
    return out


def mul(a, b):
    out = Tensor(a.value * b.value, (a, b))

    def backward_fn(grad):
        a.accumulate(_unbroadcast(grad * b.value, a.shape))
        b.accumulate(_unbroadcast(grad * a.value, b.shape))

    out.backward_fn = backward_fn
    return out


def scale(a, factor):
    out = Tensor(a.value * factor, (a,))
    out.backward_fn = lambda grad: a.accumulate(grad * factor)
    return out


def matmul(a, b):
    """Batched product; b may be a 2D weight shared by every batch entry"""
    if a.shape[-1] != b.shape[-2 if b.value.ndim > 1 else 0]:
        raise DimensionError(
            "Cannot multiply shapes " + str(a.shape) + " and " + str(b.shape)
        )
    out = Tensor(np.matmul(a.value, b.value), (a, b))

    def backward_fn(grad):
        a.accumulate(np.matmul(grad, np.swapaxes(b.value, -1, -2)))
        if b.value.ndim == 2 and a.value.ndim > 2:
            a_2d = a.value.reshape(-1, a.shape[-1])
            b.accumulate(a_2d.T @ grad.reshape(-1, grad.shape[-1]))
        else:
            b.accumulate(np.matmul(np.swapaxes(a.value, -1, -2), grad))

    out.backward_fn = backward_fn
    return out


def reshape(a, shape):
    out = Tensor(a.value.reshape(shape), (a,))
    out.backward_fn = lambda grad: a.accumulate(grad.reshape(a.shape))
    return out


def transpose(a, axes):
    inverse = np.argsort(axes)
    out = Tensor(np.transpose(a.value, axes), (a,))
    out.backward_fn = lambda grad: a.accumulate(np.transpose(grad, inverse))
    return out


def take(a, key):
    """Basic indexing (slices and integers) of a"""
    out = Tensor(a.value[key], (a,))

    def backward_fn(grad):
        full = np.zeros_like(a.value)
        full[key] = grad
        a.accumulate(full)

    out.backward_fn = backward_fn
    return out


def embedding(table, ids):
    """Rows of table gathered at the integer ids"""
    out = Tensor(table.value[ids], (table,))

    def backward_fn(grad):
        full = np.zeros_like(table.value)
        np.add.at(full, ids, grad)
        table.accumulate(full)

    out.backward_fn = backward_fn
    return out


def layer_norm(x, gain, bias, eps=1e-5):
    """Normalization over the last axis followed by an affine map"""
    mean = x.value.mean(axis=-1, keepdims=True)
    centered = x.value - mean
    inv_std = 1.0 / np.sqrt((centered**2).mean(axis=-1, keepdims=True) + eps)
    x_hat = centered * inv_std
    out = Tensor(x_hat * gain.value + bias.value, (x, gain, bias))

    def backward_fn(grad):
        gain.accumulate(_unbroadcast(grad * x_hat, gain.shape))
        bias.accumulate(_unbroadcast(grad, bias.shape))
        g_hat = grad * gain.value
        x.accumulate(
            inv_std
            * (
                g_hat
                - g_hat.mean(axis=-1, keepdims=True)
                - x_hat * (g_hat * x_hat).mean(axis=-1, keepdims=True)
            )
        )

    out.backward_fn = backward_fn
    return out


def gelu(x):
    """Exact GELU x * Phi(x)"""
    cdf = 0.5 * (1.0 + erf(x.value / SQRT_2))
    out = Tensor(x.value * cdf, (x,))

    def backward_fn(grad):
        pdf = INV_SQRT_2PI * np.exp(-0.5 * x.value**2)
        x.accumulate(grad * (cdf + x.value * pdf))

    out.backward_fn = backward_fn
    return out


def masked_softmax(x, support):
    """Softmax over the last axis, exactly 0 outside the boolean support"""
    support = np.broadcast_to(support, x.shape)
    if not np.all(np.any(support, axis=-1)):
        raise InvalidSupportError("softmax row with an empty support")
    shifted = np.where(support, x.value, -np.inf)
    shifted = shifted - shifted.max(axis=-1, keepdims=True)
    e = np.where(support, np.exp(shifted), 0.0)
    p = e / e.sum(axis=-1, keepdims=True)
    out = Tensor(p, (x,))

    def backward_fn(grad):
        x.accumulate(p * (grad - (grad * p).sum(axis=-1, keepdims=True)))

    out.backward_fn = backward_fn
    return out


def head_mask(probs, keep):
    """Replace the attention matrix of every head with keep==False by zeros

    probs has shape (batch, heads, query, key), keep has shape (heads,)
    """
    keep = np.asarray(keep, dtype=bool)[None, :, None, None]
    out = Tensor(np.where(keep, probs.value, 0.0), (probs,))
    out.backward_fn = lambda grad: probs.accumulate(np.where(keep, grad, 0.0))
    return out


def dropout(x, rate, rng):
    """Inverted dropout driven by rng (identity when rate is 0)"""
    if rate <= 0.0:
        return x
    keep = (rng.random(x.shape) >= rate) / (1.0 - rate)
    out = Tensor(x.value * keep, (x,))
    out.backward_fn = lambda grad: x.accumulate(grad * keep)
    return out


def nll(probs, targets, weights):
    """Weighted sum of -log probs[i, targets[i]]

    Parameters
    ----------
    probs : Tensor
        (n, k) probability rows
    targets : ndarray
        (n,) integer target index per row
    weights : ndarray
        (n,) weight per row (0 removes the row from the loss)

    Returns
    -------
    loss : Tensor
        scalar loss
    """
    rows = np.arange(probs.shape[0])
    picked = probs.value[rows, targets]
    is_floored = picked < PROBA_FLOOR
    safe = np.where(is_floored, PROBA_FLOOR, picked)
    active = weights != 0.0
    terms = np.where(active, -np.log(safe), 0.0) * weights
    out = Tensor(np.array(terms.sum()), (probs,))

    def backward_fn(grad):
        full = np.zeros_like(probs.value)
        full[rows, targets] = np.where(
            active & ~is_floored, -weights / safe, 0.0
        ) * grad
        probs.accumulate(full)

    out.backward_fn = backward_fn
    return out

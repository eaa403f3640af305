import numpy as np

from QAHeadTool.Functions import RegimeError
from QAHeadTool.Functions.Numerics import autograd as ag
from QAHeadTool.Functions.Numerics.matrix import cross_entropy

# Weight of each span cross-entropy in the joint loss
SPAN_WEIGHT = 0.5


def _category_index(categories, label):
    if label.kind not in categories:
        raise RegimeError(
            "Label " + label.kind + " is not one of the categories " + str(categories)
        )
    return categories.index(label.kind)


def sample_loss(outputs, label):
    """Joint loss of one sample

    L = l(f_a, y_a) + 0.5 * 1{Span} * (l(f_s, y_s) + l(f_e, y_e)), the span
    terms only exist for Span labels.

    Parameters
    ----------
    outputs : ModelOutputs
        distributions of the sample
    label : AnswerLabel
        gold answer

    Returns
    -------
    loss : float
        per-sample loss
    """
    loss = cross_entropy(outputs.f_a, _category_index(outputs.categories, label))
    if label.is_span:
        if outputs.f_s is None or outputs.f_e is None:
            raise RegimeError("Span label given to a model without span heads")
        loss = (
            loss
            + SPAN_WEIGHT * cross_entropy(outputs.f_s, label.token_start)
            + SPAN_WEIGHT * cross_entropy(outputs.f_e, label.token_end)
        )
    return loss


def batch_loss(outputs, samples, categories):
    """Mean joint loss of a batch, recorded on the differentiation tape

    Parameters
    ----------
    outputs : dict
        Tensors returned by forward_tensors
    samples : list
        EncodedSample of the batch (same order as the outputs rows)
    categories : list
        answer category names of the regime

    Returns
    -------
    loss : Tensor
        scalar mean over the batch
    """
    n_batch = len(samples)
    y_a = np.array([_category_index(categories, sample.label) for sample in samples])
    loss = ag.nll(outputs["answer"], y_a, np.full(n_batch, 1.0 / n_batch))
    is_span = np.array([sample.label.is_span for sample in samples])
    if not is_span.any():
        return loss
    if "start" not in outputs:
        raise RegimeError("Span label given to a model without span heads")
    weights = np.where(is_span, SPAN_WEIGHT / n_batch, 0.0)
    y_s = np.array([s.label.token_start if s.label.is_span else 0 for s in samples])
    y_e = np.array([s.label.token_end if s.label.is_span else 0 for s in samples])
    loss = ag.add(loss, ag.nll(outputs["start"], y_s, weights))
    return ag.add(loss, ag.nll(outputs["end"], y_e, weights))

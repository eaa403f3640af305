from logging import getLogger

import numpy as np

from QAHeadTool.Classes.QAPrediction import QAPrediction
from QAHeadTool.Functions.Eval import MAX_ANSWER_LEN


def best_span(f_s, f_e, context_start, context_end, max_answer_len=MAX_ANSWER_LEN):
    """Span maximizing f_s[s] * f_e[e] with s <= e < s + max_answer_len

    Both ends lie in [context_start, context_end). Ties go to the lowest start,
    then to the lowest end.

    Returns
    -------
    span : tuple
        (start, end, score), None when no span is feasible
    """
    if context_end <= context_start or max_answer_len < 1:
        return None
    start_probs = f_s[context_start:context_end]
    end_probs = f_e[context_start:context_end]
    scores = np.outer(start_probs, end_probs)
    n_positions = scores.shape[0]
    rows, cols = np.indices((n_positions, n_positions))
    is_feasible = (cols >= rows) & (cols - rows < max_answer_len)
    flat = int(np.argmax(np.where(is_feasible, scores, -np.inf)))
    start, end = divmod(flat, n_positions)
    return context_start + start, context_start + end, float(scores[start, end])


def decode(outputs, sample, max_answer_len=MAX_ANSWER_LEN):
    """Turn output distributions into a QAPrediction

    Parameters
    ----------
    outputs : ModelOutputs
        distributions of the sample
    sample : EncodedSample
        encoded input (for the span text)
    max_answer_len : int
        longest span in tokens

    Returns
    -------
    prediction : QAPrediction
        argmax category (lowest index on ties) and the best span when Span
    """
    index = int(np.argmax(outputs.f_a))
    category = outputs.categories[index]
    probability = float(outputs.f_a[index])
    if category != "Span":
        return QAPrediction(category=category, probability=probability)
    span = None
    if outputs.f_s is not None:
        span = best_span(
            outputs.f_s, outputs.f_e, outputs.context_start, outputs.context_end, max_answer_len
        )
    if span is None:
        getLogger(__name__).warning(
            "%s: no feasible span, predicted NoAnswer", sample.sample_id
        )
        return QAPrediction(category="NoAnswer", probability=probability, is_fallback=True)
    start, end, score = span
    return QAPrediction(
        category="Span",
        token_start=start,
        token_end=end,
        text=sample.get_span_text(start, end),
        probability=probability,
        span_score=score,
    )

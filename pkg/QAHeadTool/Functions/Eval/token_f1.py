import re
import string
from collections import Counter

ARTICLES = re.compile(r"\b(a|an|the)\b")
PUNCTUATION = set(string.punctuation)


def normalize_answer(text):
    """Lower case, remove punctuation, articles and extra whitespace"""
    text = "".join(char for char in text.lower() if char not in PUNCTUATION)
    return " ".join(ARTICLES.sub(" ", text).split())


def _f1(predicted_tokens, gold_tokens):
    if len(predicted_tokens) == 0 or len(gold_tokens) == 0:
        return float(predicted_tokens == gold_tokens)
    common = Counter(predicted_tokens) & Counter(gold_tokens)
    n_same = sum(common.values())
    if n_same == 0:
        return 0.0
    precision = n_same / len(predicted_tokens)
    recall = n_same / len(gold_tokens)
    return 2 * precision * recall / (precision + recall)


def token_f1(predicted_text, gold_texts):
    """Token overlap F1 of a prediction, best over the gold answers

    Parameters
    ----------
    predicted_text : str
        decoded answer ("" for NoAnswer)
    gold_texts : list
        one or more gold answers ("" for NoAnswer)

    Returns
    -------
    f1 : float
        in [0, 1], 1.0 when both sides are empty
    """
    if isinstance(gold_texts, str):
        gold_texts = [gold_texts]
    predicted_tokens = normalize_answer(predicted_text).split()
    return max(_f1(predicted_tokens, normalize_answer(gold).split()) for gold in gold_texts)

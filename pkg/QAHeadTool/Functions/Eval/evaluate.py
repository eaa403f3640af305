from csv import writer
from logging import getLogger
from math import fsum
from os import makedirs
from os.path import dirname

from sklearn.metrics import confusion_matrix

from QAHeadTool.Classes.Metrics import Metrics
from QAHeadTool.Functions import UsageError, regime_categories
from QAHeadTool.Functions.Eval import MAX_ANSWER_LEN
from QAHeadTool.Functions.Eval.decode import decode
from QAHeadTool.Functions.Eval.token_f1 import token_f1
from QAHeadTool.Functions.Model.forward import forward

TSV_HEADER = ["sample_id", "task", "gold", "predicted", "score", "text"]

logger = getLogger(__name__)


def score_sample(prediction, sample):
    """Score of one prediction

    Boolean and question type samples score 1.0 on an exact category match
    (NoAnswer or Span on a boolean sample is wrong). Extractive samples get
    the token F1 of the decoded span; No/Yes on an extractive sample scores 0
    and NoAnswer against a NoAnswer gold scores 1.

    Returns
    -------
    score : float
        accuracy point or F1 in [0, 1]
    """
    label = sample.label
    if sample.task != "extractive":
        return float(prediction.category == label.kind)
    if prediction.category not in ["NoAnswer", "Span"]:
        return 0.0
    if not label.is_span:
        return float(prediction.category == "NoAnswer")
    if prediction.category == "NoAnswer":
        return 0.0
    return token_f1(prediction.text, sample.gold_texts or [sample.get_span_text()])


def evaluate(params, dataset, mask=None, max_answer_len=MAX_ANSWER_LEN, return_rows=False):
    """Dev metrics of a model under an optional HeadMask

    Each sample goes through its own eval-mode forward call, so the scores do
    not depend on the dataset order.

    Parameters
    ----------
    params : Parameters
        weights and their ModelConfig
    dataset : Dataset
        dev samples
    mask : HeadMask
        heads to zero (None keeps every head)
    max_answer_len : int
        longest decoded span
    return_rows : bool
        True to also return the per sample rows (TSV_HEADER order)

    Returns
    -------
    metrics : Metrics
        accuracy over the boolean samples, mean F1 over the extractive ones
    rows : list
        per sample rows (only if return_rows)
    """
    if len(dataset) == 0:
        raise UsageError("Cannot evaluate the empty dataset " + dataset.get_id())
    is_type_model = params.config.regime == "question_type"
    if any((sample.task == "question_type") != is_type_model for sample in dataset):
        raise UsageError(
            "Dataset " + dataset.get_id() + " does not match the regime " + params.config.regime
        )
    accuracy_scores, f1_scores, rows = list(), list(), list()
    gold_kinds, predicted_kinds = list(), list()
    n_fallback = 0
    for sample in dataset:
        prediction = decode(forward(params, sample, mask), sample, max_answer_len)
        score = score_sample(prediction, sample)
        n_fallback += prediction.is_fallback
        if sample.task == "extractive":
            f1_scores.append(score)
        else:
            accuracy_scores.append(score)
        gold_kinds.append(sample.label.kind)
        predicted_kinds.append(prediction.category)
        rows.append(
            [
                sample.sample_id,
                sample.task,
                str(sample.label),
                str(prediction.category),
                repr(score),
                prediction.text,
            ]
        )
    kinds = list(regime_categories[params.config.regime])
    kinds += sorted(set(gold_kinds) - set(kinds))
    counts = confusion_matrix(gold_kinds, predicted_kinds, labels=kinds)
    confusion = {
        gold: {pred: int(counts[i, j]) for j, pred in enumerate(kinds)}
        for i, gold in enumerate(kinds)
    }
    metrics = Metrics(
        task=dataset.get_id(),
        n=len(dataset),
        accuracy=fsum(accuracy_scores) / len(accuracy_scores) if accuracy_scores else None,
        f1=fsum(f1_scores) / len(f1_scores) if f1_scores else None,
        confusion=confusion,
        n_fallback=n_fallback,
    )
    logger.debug("evaluate: %s", metrics)
    if return_rows:
        return metrics, rows
    return metrics


def write_predictions_tsv(rows, file_path):
    """Write the per sample rows of evaluate as a tab separated file"""
    folder = dirname(file_path)
    if folder:
        makedirs(folder, exist_ok=True)
    with open(file_path, "w", newline="", encoding="utf-8") as tsv_file:
        tsv_writer = writer(tsv_file, delimiter="\t", lineterminator="\n")
        tsv_writer.writerow(TSV_HEADER)
        tsv_writer.writerows(rows)
    return file_path

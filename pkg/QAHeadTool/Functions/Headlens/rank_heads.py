from logging import getLogger

from joblib import Parallel, delayed
from threadpoolctl import threadpool_limits

from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.ImportanceMatrix import ImportanceMatrix
from QAHeadTool.Functions import UsageError
from QAHeadTool.Functions.Eval import MAX_ANSWER_LEN
from QAHeadTool.Functions.Eval.evaluate import evaluate
from QAHeadTool.Functions.Headlens import task_metrics

logger = getLogger(__name__)


def check_metric(dataset, metric):
    """Raise a UsageError unless some sample of dataset is scored by metric"""
    if metric not in ["accuracy", "f1"]:
        raise UsageError("Unknown metric " + repr(metric) + " (accuracy or f1)")
    if not any(task_metrics.get(sample.task) == metric for sample in dataset):
        raise UsageError(
            "Dataset " + dataset.get_id() + " has no sample scored by " + metric
        )


def evaluate_points(params, dataset, mask, metric, max_answer_len=MAX_ANSWER_LEN):
    """Metric points of the model under one HeadMask

    BLAS runs single threaded so that every worker sums in the same order.
    """
    with threadpool_limits(limits=1):
        metrics = evaluate(params, dataset, mask=mask, max_answer_len=max_answer_len)
    return metrics.get_points(metric)


def rank_heads(
    params,
    dataset,
    metric,
    n_jobs=1,
    checkpoint_id="",
    max_answer_len=MAX_ANSWER_LEN,
):
    """Leave-one-out importance of every attention head

    The unmasked model is evaluated once, then once per head with exactly
    that head masked. Evaluations run on a joblib pool and are gathered in
    (layer, head) order, so the matrix does not depend on n_jobs.

    Parameters
    ----------
    params : Parameters
        weights and ModelConfig
    dataset : Dataset
        dev samples
    metric : str
        "accuracy" or "f1"
    n_jobs : int
        number of joblib workers
    checkpoint_id : str
        identifier stored in the matrix
    max_answer_len : int
        longest decoded span

    Returns
    -------
    matrix : ImportanceMatrix
        L x H deltas in metric points
    """
    check_metric(dataset, metric)
    n_layers, n_heads = params.config.n_layers, params.config.n_heads
    baseline = evaluate_points(params, dataset, None, metric, max_answer_len)
    logger.info(
        "rank %d heads on %s: baseline %s %.4f",
        n_layers * n_heads,
        dataset.get_id(),
        metric,
        baseline,
    )
    masks = [
        HeadMask.leave_one_out(n_layers, n_heads, layer, head)
        for layer in range(n_layers)
        for head in range(n_heads)
    ]
    points = Parallel(n_jobs=n_jobs)(
        delayed(evaluate_points)(params, dataset, mask, metric, max_answer_len)
        for mask in masks
    )
    masked = [points[layer * n_heads : (layer + 1) * n_heads] for layer in range(n_layers)]
    # Quantized points: the differences are exact
    deltas = [[value - baseline for value in row] for row in masked]
    return ImportanceMatrix(
        deltas=deltas,
        masked=masked,
        baseline=baseline,
        metric=metric,
        checkpoint_id=checkpoint_id,
        dataset_id=dataset.get_id(),
    )

from QAHeadTool.Functions import UsageError
from QAHeadTool.Methods.ImportanceMatrix.compare_tasks import get_rank


def compare_single_and_multi(self, single):
    """Where the extreme heads of a multi-task model sit in a single-task ranking
    Both matrices must share the geometry and the metric.
    Parameters
    ----------
    self: ImportanceMatrix
        importance in the all-purpose model
    single: ImportanceMatrix
        importance in a model fine-tuned on one task
    Returns
    -------
    report: dict
        top head of the multi-task model and its rank among the single-task
        heads, same for its most detrimental head (largest delta)
    """
    if self.shape != single.shape or self.metric != single.metric:
        raise UsageError(
            "Cannot compare a "
            + self.metric
            + " matrix of shape "
            + str(self.shape)
            + " with a "
            + single.metric
            + " matrix of shape "
            + str(single.shape)
        )
    order_multi, order_single = self.top_heads(), single.top_heads()
    top = order_multi[0][:2]
    worst = min(order_multi, key=lambda entry: (-entry[2], entry[0], entry[1]))[:2]
    return {
        "multi_top": list(top),
        "multi_top_rank_in_single": get_rank(order_single, *top),
        "multi_worst": list(worst),
        "multi_worst_rank_in_single": get_rank(order_single, *worst),
        "n_heads": len(order_single),
    }

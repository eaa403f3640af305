from math import ceil

from numpy import ptp
from scipy.stats import spearmanr

from QAHeadTool.Functions import UsageError

TOP_FRACTION = 0.1


def get_rank(ordering, layer, head):
    """1-based position of (layer, head) in a top_heads ordering"""
    for rank, entry in enumerate(ordering, start=1):
        if entry[:2] == (layer, head):
            return rank
    raise UsageError("Head " + str((layer, head)) + " not found")


def compare_tasks(self, other):
    """Specialization report of two matrices ranked on the same checkpoint
    Parameters
    ----------
    self: ImportanceMatrix
        importance on task a
    other: ImportanceMatrix
        importance on task b
    Returns
    -------
    report: dict
        spearman (None when a matrix is constant), top1_a, top1_b,
        top10pct_overlap (shared fraction of the top 10% sets), cross_rank
        (rank of the top head of a in the ordering of b) and cross_delta
    """
    if self.shape != other.shape:
        raise UsageError(
            "Cannot compare matrices of shapes "
            + str(self.shape)
            + " and "
            + str(other.shape)
        )
    if self.checkpoint_id != other.checkpoint_id:
        self.get_logger().warning(
            "Comparing matrices of different checkpoints (%s, %s)",
            self.checkpoint_id,
            other.checkpoint_id,
        )
    order_a, order_b = self.top_heads(), other.top_heads()
    n_top = int(ceil(TOP_FRACTION * len(order_a)))
    top_a = set(entry[:2] for entry in order_a[:n_top])
    top_b = set(entry[:2] for entry in order_b[:n_top])
    if ptp(self.deltas) == 0 or ptp(other.deltas) == 0:
        spearman = None
    else:
        spearman = float(spearmanr(self.deltas.ravel(), other.deltas.ravel())[0])
    top1_a, top1_b = order_a[0][:2], order_b[0][:2]
    return {
        "spearman": spearman,
        "top1_a": list(top1_a),
        "top1_b": list(top1_b),
        "distinct_top1": top1_a != top1_b,
        "top10pct_overlap": len(top_a & top_b) / n_top,
        "cross_rank": get_rank(order_b, *top1_a),
        "cross_delta": float(other.deltas[top1_a]),
        "metric_a": self.metric,
        "metric_b": other.metric,
        "dataset_a": self.dataset_id,
        "dataset_b": other.dataset_id,
    }

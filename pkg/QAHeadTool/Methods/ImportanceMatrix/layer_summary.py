from numpy import percentile

from QAHeadTool.Classes.LayerSummary import LayerSummary


def layer_summary(self):
    """Returns the per-layer min, quartiles, median and max of the deltas
    Percentiles interpolate linearly between the closest ranks.
    Parameters
    ----------
    self: ImportanceMatrix
        an ImportanceMatrix object
    Returns
    -------
    summary: LayerSummary
        one row of five statistics per layer
    """
    stats = percentile(self.deltas, [0, 25, 50, 75, 100], axis=1).T
    return LayerSummary(stats=stats, metric=self.metric)

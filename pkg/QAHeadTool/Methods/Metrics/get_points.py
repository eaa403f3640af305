from QAHeadTool.Functions import UsageError

# Metric points are multiples of 2**-20 so that sums and differences are exact
QUANTUM = 2.0**-20


def quantize(points):
    """Round a value to the nearest multiple of QUANTUM"""
    return round(points / QUANTUM) * QUANTUM


def get_points(self, metric):
    """Returns a metric in points (percent), quantized to 2**-20
    Parameters
    ----------
    self: Metrics
        a Metrics object
    metric: str
        "accuracy" or "f1"
    Returns
    -------
    points: float
        100 x metric value
    Raises
    ------
    UsageError
        the dataset holds no sample scored by metric
    """
    value = {"accuracy": self.accuracy, "f1": self.f1}.get(metric)
    if value is None:
        raise UsageError(
            "Metric " + repr(metric) + " is not available for the task " + self.task
        )
    return quantize(100.0 * value)

from collections import Counter


def get_task_counts(self):
    """Returns the number of samples of each task and of each label

    Returns
    -------
    counts: dict
        {"tasks": {task: n}, "labels": {kind: n}}
    """
    return {
        "tasks": dict(sorted(Counter(sample.task for sample in self.samples).items())),
        "labels": dict(
            sorted(Counter(sample.label.kind for sample in self.samples).items())
        ),
    }

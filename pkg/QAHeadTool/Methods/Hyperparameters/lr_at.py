from QAHeadTool.Functions import UsageError


def lr_at(self, step, total_steps):
    """Returns the learning rate of an optimizer step
    Linear warmup from 0 to learning_rate over warmup_ratio * total_steps
    steps, then linear decay to 0 at total_steps.
    Parameters
    ----------
    self: Hyperparameters
        a Hyperparameters object
    step: int
        optimizer step (0 <= step <= total_steps)
    total_steps: int
        number of optimizer steps of the run
    Returns
    -------
    lr: float
        learning rate
    """
    if not 0 <= step <= total_steps:
        raise UsageError(
            "step " + str(step) + " outside [0, " + str(total_steps) + "]"
        )
    warmup_steps = self.warmup_ratio * total_steps
    if step < warmup_steps:
        return self.learning_rate * step / warmup_steps
    if total_steps == warmup_steps:
        return self.learning_rate
    return self.learning_rate * (total_steps - step) / (total_steps - warmup_steps)

from logging import getLogger

import numpy as np

from QAHeadTool.Functions import NumericError
from QAHeadTool.Functions.Numerics.rng import make_rng

logger = getLogger(__name__)


def gradient_check(
    loss_fn,
    params,
    step=1e-3,
    tolerance=1e-4,
    n_entries=200,
    seed=0,
    grad_floor=1e-2,
):
    """Compare analytic gradients with central finite differences

    Parameters
    ----------
    loss_fn : callable
        loss_fn(compute_grad) returns the scalar loss for the current
        parameter values; when compute_grad is True it must also fill the
        grad of every Parameter (previous grads are zeroed here first)
    params : list
        list of Parameter objects to check
    step : float
        finite difference step h
    tolerance : float
        maximum accepted relative error
    n_entries : int
        number of weight entries sampled (spread over every Parameter)
    seed : int
        seed of the entry sampling
    grad_floor : float
        lower bound of the relative error denominator, entries whose gradient
        is below it are judged on their absolute error divided by grad_floor

    Returns
    -------
    report : dict
        max_rel_error, passed, n_checked and the worst entry
    """
    for param in params:
        param.zero_grad()
    loss = loss_fn(True)
    if not np.isfinite(loss):
        raise NumericError("gradient_check: loss is not finite (" + str(loss) + ")")
    analytic = {param.name: param.grad.copy() for param in params}

    # Every Parameter gets at least one sampled entry
    rng = make_rng(seed, stream=(7,))
    sizes = np.array([param.value.size for param in params])
    n_per_param = np.maximum(1, np.round(n_entries * sizes / sizes.sum())).astype(int)
    entries = []
    for param, n_param in zip(params, n_per_param):
        n_param = min(int(n_param), param.value.size)
        for flat in rng.choice(param.value.size, size=n_param, replace=False):
            entries.append((param, int(flat)))

    max_rel = 0.0
    worst = None
    for param, flat in entries:
        index = np.unravel_index(flat, param.value.shape)
        saved = param.value[index]
        param.value[index] = saved + step
        loss_plus = loss_fn(False)
        param.value[index] = saved - step
        loss_minus = loss_fn(False)
        param.value[index] = saved
        if not (np.isfinite(loss_plus) and np.isfinite(loss_minus)):
            raise NumericError("gradient_check: loss is not finite around " + param.name)
        numeric = (loss_plus - loss_minus) / (2.0 * step)
        exact = analytic[param.name][index]
        rel = abs(exact - numeric) / max(abs(exact), abs(numeric), grad_floor)
        if worst is None or rel > max_rel:
            max_rel = rel
            worst = {
                "name": param.name,
                "index": [int(i) for i in index],
                "analytic": float(exact),
                "numeric": float(numeric),
            }
    report = {
        "max_rel_error": float(max_rel),
        "n_checked": len(entries),
        "passed": bool(max_rel <= tolerance),
        "worst": worst,
        "step": step,
        "tolerance": tolerance,
    }
    logger.info(
        "gradient_check: %d entries, max relative error %.3e", len(entries), max_rel
    )
    return report

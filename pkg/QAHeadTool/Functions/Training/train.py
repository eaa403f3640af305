from logging import getLogger
from math import fsum
from os.path import join
from time import perf_counter

import numpy as np

from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.RngState import RngState
from QAHeadTool.Classes.TrainReport import TrainReport
from QAHeadTool.Functions import (
    NumericError,
    RegimeError,
    UsageError,
    regime_categories,
    regime_tasks,
)
from QAHeadTool.Functions.Eval.evaluate import evaluate
from QAHeadTool.Functions.Load.load_checkpoint import load_checkpoint
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Model.forward import build_batch, forward_tensors
from QAHeadTool.Functions.Model.init_parameters import init_parameters
from QAHeadTool.Functions.Training import (
    DROPOUT_STREAM,
    INIT_STREAM,
    SHUFFLE_STREAM,
    TRANSFER_STREAM,
)
from QAHeadTool.Functions.Training.clip import clip_global_norm
from QAHeadTool.Functions.Training.loss import batch_loss
from QAHeadTool.Functions.Training.optimizer import Adam

logger = getLogger(__name__)


def get_stream(seed, index):
    """Generator of one of the training streams of a seed"""
    return RngState(seed=seed).spawn(index + 1)[index].get_generator()


def init_model(regime, hp, init=None, config=None):
    """Weights a training run starts from

    Parameters
    ----------
    regime : str
        boolq, squad, all or question_type
    hp : Hyperparameters
        seed, dropout and sequence length
    init : str
        checkpoint directory (None for a random initialization)
    config : ModelConfig
        geometry of a random initialization (desk geometry by default)

    Returns
    -------
    params : Parameters
        initial weights; a checkpoint of another regime keeps its backbone and
        gets fresh task heads
    """
    if init is not None:
        params = load_checkpoint(init)
        if params.config.regime != regime:
            params = params.transfer(regime, get_stream(hp.seed, TRANSFER_STREAM))
        params.config.dropout_rate = hp.dropout
        params.seed = hp.seed
        return params
    if config is None:
        config = ModelConfig(**geometry_presets["desk"])
    config = config.copy(max_seq_len=hp.max_seq_len, dropout_rate=hp.dropout)
    config = config.for_regime(regime)
    return init_parameters(config, get_stream(hp.seed, INIT_STREAM), hp.seed)


def train(regime, data, hp, init=None, config=None, dev_data=None, out_dir=None):
    """Fine-tune a model on a regime

    Mini-batch Adam with bias correction, global gradient norm clipping and
    the warmup / linear decay schedule of hp. Batches follow a per-epoch
    permutation drawn from the seed; the last batch may be smaller.

    Parameters
    ----------
    regime : str
        boolq, squad, all or question_type
    data : Dataset
        training samples (tasks allowed by the regime)
    hp : Hyperparameters
        optimizer, schedule and seed
    init : str
        checkpoint directory to start from (transfer mode when its regime
        differs), None for a random initialization
    config : ModelConfig
        geometry of a random initialization
    dev_data : Dataset
        evaluated after every epoch when given
    out_dir : str
        directory receiving epoch_<e>/ and checkpoint/ (None: nothing written)

    Returns
    -------
    report : TrainReport
        losses, dev metrics and checkpoint path
    params : Parameters
        trained weights
    """
    if len(data) == 0:
        raise UsageError("Cannot train on the empty dataset " + data.get_id())
    allowed = regime_tasks[regime]
    if any(sample.task not in allowed for sample in data):
        raise RegimeError(
            "Dataset " + data.get_id() + " holds tasks outside " + str(allowed)
        )
    params = init_model(regime, hp, init, config)
    if max(len(sample) for sample in data) > params.config.max_seq_len:
        raise UsageError("Samples longer than the model max_seq_len")
    categories = regime_categories[regime]
    shuffle_rng = get_stream(hp.seed, SHUFFLE_STREAM)
    dropout_rng = get_stream(hp.seed, DROPOUT_STREAM)
    optimizer = Adam.from_hyperparameters(params.get_list(), hp)
    total_steps = hp.get_total_steps(len(data))
    report = TrainReport(
        regime=regime,
        seed=hp.seed,
        n_truncated=data.n_truncated,
        n_samples=len(data),
        total_steps=total_steps,
        init="random" if init is None else str(init),
    )
    logger.info(
        "train %s on %s: %d samples, %d steps, %d weights",
        regime,
        data.get_id(),
        len(data),
        total_steps,
        params.get_n_values(),
    )
    start_time = perf_counter()
    step = 0
    for epoch in range(hp.epochs):
        order = shuffle_rng.permutation(len(data))
        batch_losses = list()
        for first in range(0, len(data), hp.batch_size):
            samples = [data[int(index)] for index in order[first : first + hp.batch_size]]
            ids, valid, context = build_batch(samples, params.config)
            params.zero_grad()
            outputs = forward_tensors(params, ids, valid, context, mode="train", rng=dropout_rng)
            loss = batch_loss(outputs, samples, categories)
            if not np.isfinite(loss.value):
                raise NumericError(
                    "Non finite loss at epoch " + str(epoch) + ", step " + str(step)
                )
            loss.backward()
            clip_global_norm([param.grad for param in params], hp.max_grad_norm)
            optimizer.step(hp.lr_at(step, total_steps))
            batch_losses.append(float(loss.value) * len(samples))
            step += 1
        report.epoch_losses.append(fsum(batch_losses) / len(data))
        message = "epoch %d/%d: mean loss %.6f" % (epoch + 1, hp.epochs, report.epoch_losses[-1])
        if dev_data is not None:
            metrics = evaluate(params, dev_data)
            report.epoch_metrics.append(metrics.as_dict())
            message += ", dev " + str(metrics)
        logger.info(message)
        if out_dir is not None:
            params.save(join(out_dir, "epoch_" + str(epoch + 1)))
    report.wall_clock = perf_counter() - start_time
    if out_dir is not None:
        report.checkpoint_path = params.save(join(out_dir, "checkpoint"))
        report.save(join(out_dir, "train_report.json"))
    return report, params

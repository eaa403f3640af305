from os.path import isdir, isfile, join

import numpy as np
import pytest

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Classes.Hyperparameters import Hyperparameters
from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.ModelOutputs import ModelOutputs
from QAHeadTool.Classes.Parameter import Parameter
from QAHeadTool.Functions import NumericError, RegimeError, UsageError
from QAHeadTool.Functions.Model import HEAD_PREFIX, geometry_presets
from QAHeadTool.Functions.Numerics import cross_entropy
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.Training.clip import clip_global_norm, global_norm
from QAHeadTool.Functions.Training.loss import sample_loss
from QAHeadTool.Functions.Training.optimizer import Adam
from QAHeadTool.Functions.Training.train import init_model, train
from Tests.conftest import make_synthetic

CONFIG = ModelConfig(**geometry_presets["gradcheck"])


def uniform_outputs():
    """Uniform f_a over 4 categories, uniform f_s / f_e over an 8 position context"""
    span = np.concatenate([np.zeros(4), np.full(8, 0.125)])
    return ModelOutputs(
        f_a=np.full(4, 0.25),
        f_s=span,
        f_e=span.copy(),
        categories=["No", "Yes", "NoAnswer", "Span"],
        context_start=4,
        context_end=12,
    )


def small_hp(**kwargs):
    options = {"epochs": 1, "batch_size": 4, "max_seq_len": 40, "seed": 0}
    options.update(kwargs)
    return Hyperparameters(**options)


def test_sample_loss_uniform():
    loss = sample_loss(uniform_outputs(), AnswerLabel("Span", 5, 9))
    assert loss == pytest.approx(np.log(32), abs=1e-9)
    assert loss == pytest.approx(3.4657359, abs=1e-7)


@pytest.mark.parametrize("kind", ["No", "Yes", "NoAnswer"])
def test_sample_loss_gating(kind):
    outputs = uniform_outputs()
    expected = cross_entropy(outputs.f_a, outputs.categories.index(kind))
    outputs.f_s = make_rng(1).dirichlet(np.ones(12))
    outputs.f_e = make_rng(2).dirichlet(np.ones(12))
    assert sample_loss(outputs, AnswerLabel(kind)) == expected


def test_sample_loss_perfect():
    outputs = ModelOutputs(
        f_a=np.eye(4)[3],
        f_s=np.eye(12)[5],
        f_e=np.eye(12)[7],
        categories=["No", "Yes", "NoAnswer", "Span"],
        context_start=4,
        context_end=12,
    )
    assert sample_loss(outputs, AnswerLabel("Span", 5, 7)) == 0.0


def test_sample_loss_regime_error():
    outputs = ModelOutputs(f_a=np.full(2, 0.5), categories=["No", "Yes"])
    with pytest.raises(RegimeError):
        sample_loss(outputs, AnswerLabel("Span", 5, 7))
    with pytest.raises(RegimeError):
        sample_loss(outputs, AnswerLabel("NoAnswer"))


def test_lr_schedule():
    hp = Hyperparameters(warmup_ratio=0.06, learning_rate=1.5e-5)
    assert hp.lr_at(0, 1000) == 0.0
    assert hp.lr_at(30, 1000) == pytest.approx(7.5e-6)
    assert hp.lr_at(60, 1000) == pytest.approx(1.5e-5)
    assert hp.lr_at(530, 1000) == pytest.approx(7.5e-6)
    assert hp.lr_at(1000, 1000) == 0.0
    with pytest.raises(UsageError):
        hp.lr_at(1001, 1000)


def test_lr_without_warmup():
    hp = Hyperparameters(warmup_ratio=0.0, learning_rate=1e-5)
    assert hp.lr_at(0, 10) == 1e-5
    assert hp.lr_at(5, 10) == pytest.approx(5e-6)


def test_clip_global_norm():
    grads = [np.array([3.0]), np.array([4.0])]
    assert clip_global_norm(grads, 10.0) == 1.0
    assert np.array_equal(grads[1], [4.0])
    grads = [np.array([4.0])]
    assert clip_global_norm(grads, 1.0) == 0.25
    assert global_norm(grads) == pytest.approx(1.0)


def test_clip_nan():
    with pytest.raises(NumericError):
        clip_global_norm([np.array([1.0, np.nan])], 1.0)


def test_adam_first_step():
    param = Parameter(name="w", value=np.array([1.0, -2.0]))
    param.grad = np.array([0.5, -3.0])
    Adam([param]).step(0.1)
    # Bias corrected first step moves every weight by lr in the gradient sign
    assert np.allclose(param.value, [0.9, -1.9], atol=1e-6)


def test_train_deterministic(tmp_path):
    data = make_synthetic("A", n_samples=8).mix_and_shuffle(
        make_synthetic("B", n_samples=8), make_rng(0)
    )
    report_1, params_1 = train("all", data, small_hp(), config=CONFIG)
    report_2, params_2 = train("all", data, small_hp(), config=CONFIG)
    assert report_1.epoch_losses == report_2.epoch_losses
    assert report_1.total_steps == 4
    for param in params_1:
        assert param.value.tobytes() == params_2[param.name].value.tobytes()
    _, params_3 = train("all", data, small_hp(seed=1), config=CONFIG)
    assert any(
        not np.array_equal(param.value, params_3[param.name].value) for param in params_1
    )


def test_train_writes_checkpoints(tmp_path):
    data = make_synthetic("B", n_samples=8)
    report, _ = train(
        "boolq",
        data,
        small_hp(epochs=2),
        config=CONFIG,
        dev_data=make_synthetic("B", n_samples=4, seed=1),
        out_dir=str(tmp_path),
    )
    assert len(report.epoch_losses) == 2
    assert len(report.epoch_metrics) == 2
    assert isdir(join(str(tmp_path), "epoch_1"))
    assert isdir(join(str(tmp_path), "epoch_2"))
    assert report.checkpoint_path == join(str(tmp_path), "checkpoint")
    assert isfile(join(str(tmp_path), "train_report.json"))


def test_transfer_keeps_backbone(tmp_path):
    data = make_synthetic("B", n_samples=8)
    _, source = train("boolq", data, small_hp(), config=CONFIG, out_dir=str(tmp_path))
    params = init_model("squad", small_hp(), init=join(str(tmp_path), "checkpoint"))
    assert params.config.regime == "squad"
    assert params.config.span_heads_enabled
    head_names = source.get_head_names()
    assert head_names == [HEAD_PREFIX + "answer.weight", HEAD_PREFIX + "answer.bias"]
    for param in source:
        if param.name not in head_names:
            assert np.array_equal(params[param.name].value, param.value)
    # Same shape in both regimes, but the answer layer is drawn again
    answer = HEAD_PREFIX + "answer.weight"
    assert params[answer].value.shape == source[answer].value.shape
    assert not np.array_equal(params[answer].value, source[answer].value)
    assert not np.any(params[HEAD_PREFIX + "answer.bias"].value)
    assert HEAD_PREFIX + "span_start.weight" in params.get_head_names()


def test_train_errors():
    with pytest.raises(RegimeError):
        train("boolq", make_synthetic("A", n_samples=4), small_hp(), config=CONFIG)
    with pytest.raises(UsageError):
        train("all", Dataset(samples=[]), small_hp(), config=CONFIG)
    with pytest.raises(UsageError):
        train(
            "boolq", make_synthetic("B", n_samples=4), small_hp(max_seq_len=24), config=CONFIG
        )


@pytest.mark.long
def test_train_loss_decreases():
    data = make_synthetic("B", n_samples=64)
    report, _ = train(
        "boolq", data, small_hp(epochs=6, batch_size=8, learning_rate=3e-3), config=CONFIG
    )
    assert report.epoch_losses[-1] < report.epoch_losses[0]


def test_transfer_same_regime_keeps_heads(tmp_path):
    data = make_synthetic("B", n_samples=8)
    _, source = train("boolq", data, small_hp(), config=CONFIG, out_dir=str(tmp_path))
    params = init_model("boolq", small_hp(), init=join(str(tmp_path), "checkpoint"))
    for param in source:
        assert np.array_equal(params[param.name].value, param.value)

import numpy as np
import pytest
from h5py import File

from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Functions import DimensionError, UsageError, regime_categories
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Model.forward import (
    attention_head,
    build_batch,
    forward,
    forward_tensors,
)
from QAHeadTool.Functions.Numerics import gradient_check
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.Training.loss import batch_loss
from QAHeadTool.Functions.tokenizer import encode
from Tests.conftest import make_params


def get_loss(params, samples, keep=None):
    """Loss tensor of a batch in eval mode"""
    ids, valid, context = build_batch(samples, params.config)
    outputs = forward_tensors(params, ids, valid, context, keep=keep)
    return batch_loss(outputs, samples, regime_categories[params.config.regime])


def make_gradcheck_batch():
    """Two 12 token samples, one Span and one Yes"""
    span = encode("A?", "abcdefgh", 12)
    span.task = "extractive"
    span.label = AnswerLabel("Span", 6, 8)
    boolean = encode("B?", "ijklmno", 12)
    boolean.task = "boolean"
    boolean.label = AnswerLabel("Yes")
    return [span, boolean]


def test_full_model_gradients():
    params = make_params(max_seq_len=12, seed=1)
    samples = make_gradcheck_batch()

    def loss_fn(compute_grad):
        loss = get_loss(params, samples)
        if compute_grad:
            loss.backward()
        return float(loss.value)

    report = gradient_check(
        loss_fn, params.get_list(), step=1e-3, tolerance=1e-4, n_entries=200
    )
    assert report["n_checked"] >= 200
    assert report["passed"], report["worst"]


@pytest.mark.parametrize(
    "geometry,n_heads", [("gradcheck", 4), ("desk", 8), ("base", 144), ("large", 384)]
)
def test_count_heads(geometry, n_heads):
    assert ModelConfig(**geometry_presets[geometry]).count_heads() == n_heads


def test_attention_head():
    rng = make_rng(0)
    q, k, v = rng.standard_normal((3, 5, 4))
    assert np.array_equal(attention_head(q, k, v, keep=False), np.zeros((5, 4)))
    # A single token attends to itself
    assert np.allclose(attention_head(q[:1], k[:1], v[:1], keep=True), v[:1])
    # Equal scores give a uniform row
    out = attention_head(np.zeros((5, 4)), k, v, keep=True)
    assert np.allclose(out, np.tile(v.mean(axis=0), (5, 1)))


def test_attention_head_shapes():
    with pytest.raises(DimensionError):
        attention_head(np.ones((3, 4)), np.ones((2, 4)), np.ones((2, 4)), keep=True)


def test_all_keep_mask_is_no_mask(tiny_params, dataset_a):
    sample = dataset_a[0]
    plain = forward(tiny_params, sample)
    kept = forward(tiny_params, sample, HeadMask(n_layers=2, n_heads=2))
    assert np.array_equal(plain.f_a, kept.f_a)
    assert np.array_equal(plain.f_s, kept.f_s)
    assert np.array_equal(plain.f_e, kept.f_e)


def test_output_distributions(tiny_params, dataset_a):
    sample = dataset_a[1]
    outputs = forward(tiny_params, sample)
    assert outputs.f_a.shape == (4,)
    assert outputs.f_a.sum() == pytest.approx(1.0)
    for dist in [outputs.f_s, outputs.f_e]:
        assert dist.sum() == pytest.approx(1.0)
        assert np.all(dist[: sample.context_start] == 0.0)
        assert np.all(dist[sample.context_end :] == 0.0)
    assert outputs.categories == ["No", "Yes", "NoAnswer", "Span"]


ALL_HEADS = [(layer, head) for layer in range(2) for head in range(2)]


@pytest.mark.parametrize("layer,head", ALL_HEADS)
def test_masked_head_is_inert(tiny_params, dataset_a, layer, head):
    sample = dataset_a[2]
    mask = HeadMask.leave_one_out(2, 2, layer, head)
    before = forward(tiny_params, sample, mask, trace=True)
    masked = before.trace[layer][head]
    assert np.array_equal(masked, np.zeros_like(masked))
    assert np.all(before.trace[layer][1 - head].sum(axis=-1) > 0.99)

    rng = make_rng(3)
    for name, index in tiny_params.get_head_columns(layer, head):
        value = tiny_params[name].value
        value[index] += rng.standard_normal(value[index].shape)
    after = forward(tiny_params, sample, mask, trace=True)
    assert np.array_equal(before.f_a, after.f_a)
    assert np.array_equal(before.f_s, after.f_s)
    assert np.array_equal(before.f_e, after.f_e)


@pytest.mark.parametrize("layer,head", ALL_HEADS)
def test_masked_head_gets_no_gradient(tiny_params, dataset_a, layer, head):
    samples = list(dataset_a)[:4]
    mask = HeadMask.leave_one_out(2, 2, layer, head)
    tiny_params.zero_grad()
    get_loss(tiny_params, samples, mask.keep).backward()
    for name, index in tiny_params.get_head_columns(layer, head):
        assert np.all(tiny_params[name].grad[index] == 0.0)
    # The other head of the layer still learns
    for name, index in tiny_params.get_head_columns(layer, 1 - head):
        if name.endswith("query.weight"):
            assert np.any(tiny_params[name].grad[index] != 0.0)


def test_forward_is_deterministic(tiny_params, dataset_b):
    first = forward(tiny_params, dataset_b[0])
    second = forward(tiny_params, dataset_b[0])
    assert np.array_equal(first.f_a, second.f_a)


def test_forward_errors(tiny_params, dataset_a):
    ids, valid, context = build_batch([dataset_a[0]], tiny_params.config)
    with pytest.raises(DimensionError):
        forward_tensors(tiny_params, ids, valid, context, keep=np.ones((3, 2), dtype=bool))
    with pytest.raises(UsageError):
        forward_tensors(tiny_params, ids, valid, context, mode="predict")
    with pytest.raises(UsageError):
        forward_tensors(tiny_params, ids, valid, context, mode="train")
    small = make_params(max_seq_len=16)
    with pytest.raises(DimensionError):
        build_batch([dataset_a[0]], small.config)


def test_boolq_regime_has_no_span_heads(dataset_b):
    params = make_params(regime="boolq")
    outputs = forward(params, dataset_b[0])
    assert outputs.f_a.shape == (2,)
    assert outputs.f_s is None and outputs.f_e is None


def test_save_trace(tmp_path, tiny_params, dataset_a):
    outputs = forward(tiny_params, dataset_a[0], HeadMask.leave_one_out(2, 2, 0, 0), trace=True)
    file_path = outputs.save_trace(str(tmp_path / "trace.h5"))
    with File(file_path, "r") as h5_file:
        assert h5_file.attrs["categories"] == "No,Yes,NoAnswer,Span"
        assert np.array_equal(h5_file["f_a"][()], outputs.f_a)
        assert np.all(h5_file["layer_0/head_0"][()] == 0.0)
        assert np.array_equal(h5_file["layer_1/head_1"][()], outputs.trace[1][1])


def test_save_trace_needs_trace(tmp_path, tiny_params, dataset_a):
    with pytest.raises(UsageError):
        forward(tiny_params, dataset_a[0]).save_trace(str(tmp_path / "trace.h5"))

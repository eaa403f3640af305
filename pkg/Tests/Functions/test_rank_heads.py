import numpy as np
import pytest

import QAHeadTool.Functions.Headlens.rank_heads as rank_module
from QAHeadTool.Functions import UsageError
from QAHeadTool.Functions.Eval.evaluate import evaluate
from QAHeadTool.Functions.Headlens.rank_heads import rank_heads
from QAHeadTool.Functions.Numerics.rng import make_rng


def test_rank_heads_evaluations(monkeypatch, tiny_params, dataset_a):
    masks = list()

    def counting_evaluate(params, dataset, mask=None, **kwargs):
        masks.append(mask)
        return evaluate(params, dataset, mask=mask, **kwargs)

    monkeypatch.setattr(rank_module, "evaluate", counting_evaluate)
    matrix = rank_heads(tiny_params, dataset_a, "f1", n_jobs=1)
    assert matrix.shape == (2, 2)
    assert masks[0] is None
    assert [mask.get_masked_heads() for mask in masks[1:]] == [
        [(0, 0)],
        [(0, 1)],
        [(1, 0)],
        [(1, 1)],
    ]


def test_rank_heads_consistency(tiny_params, dataset_a):
    matrix = rank_heads(tiny_params, dataset_a, "f1", checkpoint_id="ckpt")
    assert np.array_equal(matrix.baseline + matrix.deltas, matrix.masked)
    assert matrix.baseline == evaluate(tiny_params, dataset_a).get_points("f1")
    assert matrix.checkpoint_id == "ckpt"
    assert matrix.dataset_id == dataset_a.get_id()


def test_zero_value_head_has_no_effect(tiny_params, dataset_b):
    for name, index in tiny_params.get_head_columns(1, 0):
        if ".value." in name:
            tiny_params[name].value[index] = 0.0
    matrix = rank_heads(tiny_params, dataset_b, "accuracy")
    assert matrix.deltas[1, 0] == 0.0


@pytest.mark.parametrize("n_jobs", [2, 8])
def test_rank_heads_jobs_invariant(tiny_params, dataset_a, dataset_b, n_jobs):
    mixed = dataset_a.mix_and_shuffle(dataset_b, make_rng(0))
    serial = rank_heads(tiny_params, mixed, "accuracy", n_jobs=1)
    pooled = rank_heads(tiny_params, mixed, "accuracy", n_jobs=n_jobs)
    assert serial.deltas.tobytes() == pooled.deltas.tobytes()
    assert serial.baseline == pooled.baseline


def test_rank_heads_metric_errors(tiny_params, dataset_b):
    with pytest.raises(UsageError):
        rank_heads(tiny_params, dataset_b, "f1")
    with pytest.raises(UsageError):
        rank_heads(tiny_params, dataset_b, "bleu")

from os.path import join

import numpy as np
import pytest

from QAHeadTool.Functions import CheckpointError, ParseError, SchemaError
from QAHeadTool.Functions.Load.load_boolq import load_boolq
from QAHeadTool.Functions.Load.load_checkpoint import load_checkpoint
from QAHeadTool.Functions.Load.load_json import LoadMissingFileError
from QAHeadTool.Functions.Load.load_jsonl_dataset import load_jsonl_dataset
from QAHeadTool.Functions.Load.load_squad import load_squad
from QAHeadTool.Functions.Load.resolve_task_data import load_data_path, resolve_task_data
from Tests.conftest import DATA_DIR, FIXTURE_SEQ_LEN, make_params, make_synthetic


def test_load_boolq():
    dataset = load_boolq(join(DATA_DIR, "boolq", "dev.jsonl"), FIXTURE_SEQ_LEN)
    assert len(dataset) == 4
    assert [sample.label.kind for sample in dataset] == ["Yes", "No", "Yes", "No"]
    assert dataset[0].question == "Is the sky blue?"
    for sample in dataset:
        assert sample.task == "boolean"
        sample.check(FIXTURE_SEQ_LEN)


def test_load_boolq_malformed():
    with pytest.raises(ParseError, match="line 2"):
        load_boolq(join(DATA_DIR, "boolq_malformed.jsonl"), FIXTURE_SEQ_LEN)


def test_load_boolq_bad_schema():
    with pytest.raises(SchemaError, match="answer"):
        load_boolq(join(DATA_DIR, "boolq_bad_schema.jsonl"), FIXTURE_SEQ_LEN)


def test_load_boolq_missing():
    with pytest.raises(LoadMissingFileError):
        load_boolq(join(DATA_DIR, "nope.jsonl"), FIXTURE_SEQ_LEN)


def test_load_squad():
    dataset = load_squad(join(DATA_DIR, "squad", "dev-v2.0.json"), FIXTURE_SEQ_LEN)
    assert len(dataset) == 3
    assert dataset.n_truncated == 1
    by_id = {sample.sample_id: sample for sample in dataset}
    date = by_id["sb-date"]
    assert date.label.kind == "Span"
    assert date.get_span_text() == "February 7, 2016"
    assert date.gold_texts == ["February 7, 2016", "February 7"]
    assert by_id["sb-impossible"].label.kind == "NoAnswer"
    assert by_id["sb-truncated"].label.kind == "NoAnswer"
    for sample in dataset:
        sample.check(FIXTURE_SEQ_LEN)


def test_load_squad_bad_start():
    with pytest.raises(SchemaError, match="bad-start"):
        load_squad(join(DATA_DIR, "squad_bad_start.json"), FIXTURE_SEQ_LEN)


def test_resolve_task_data():
    boolq = resolve_task_data(DATA_DIR, "boolq", "dev", FIXTURE_SEQ_LEN)
    squad = resolve_task_data(DATA_DIR, "squad", "train", FIXTURE_SEQ_LEN)
    mixed = resolve_task_data(DATA_DIR, "all", "dev", FIXTURE_SEQ_LEN, seed=3)
    assert (len(boolq), len(squad), len(mixed)) == (4, 3, 7)
    assert mixed.get_task_counts()["tasks"] == {"boolean": 4, "extractive": 3}
    again = resolve_task_data(DATA_DIR, "all", "dev", FIXTURE_SEQ_LEN, seed=3)
    assert [sample.sample_id for sample in mixed] == [sample.sample_id for sample in again]


def test_resolve_missing_dir(tmp_path):
    with pytest.raises(LoadMissingFileError):
        resolve_task_data(str(tmp_path / "missing"), "boolq", "dev", FIXTURE_SEQ_LEN)


def test_load_data_path_file():
    dataset = load_data_path(
        join(DATA_DIR, "squad", "dev-v2.0.json"), "squad", "dev", FIXTURE_SEQ_LEN
    )
    assert dataset.provenance == "squad"
    dataset = load_data_path(
        join(DATA_DIR, "boolq", "dev.jsonl"), "boolq", "dev", FIXTURE_SEQ_LEN
    )
    assert dataset.provenance == "boolq"


def test_synthetic_jsonl_reload(tmp_path):
    dataset = make_synthetic("A", n_samples=10)
    file_path = dataset.save_jsonl(str(tmp_path / "synthetic_A_dev.jsonl"))
    reloaded = load_jsonl_dataset(file_path, 40, "dev", "synthetic-A")
    assert len(reloaded) == 10
    for sample, other in zip(dataset, reloaded):
        assert np.array_equal(sample.token_ids, other.token_ids)
        assert sample.label == other.label


def test_checkpoint_bit_exact(tmp_path):
    params = make_params(seed=5)
    params.save(str(tmp_path / "ckpt"))
    loaded = load_checkpoint(str(tmp_path / "ckpt"))
    assert loaded.config == params.config
    assert loaded.seed == params.seed
    assert list(loaded.tensors) == list(params.tensors)
    for param in params:
        assert loaded[param.name].value.tobytes() == param.value.tobytes()


def test_checkpoint_missing(tmp_path):
    with pytest.raises(CheckpointError):
        load_checkpoint(str(tmp_path))

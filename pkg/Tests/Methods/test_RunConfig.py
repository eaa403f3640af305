import json

import pytest

from QAHeadTool.Classes.RunConfig import RunConfig
from QAHeadTool.Functions import UsageError

DEFAULTS = {"epochs": 5, "learning_rate": 3e-4, "seed": 0, "data_dir": "data"}


@pytest.mark.METHODS
def test_resolve_precedence(tmp_path):
    config_file = str(tmp_path / "run.json")
    with open(config_file, "w") as json_file:
        json.dump({"epochs": 2, "seed": 9}, json_file)
    run_config = RunConfig.resolve(
        "train", {"seed": 4, "learning_rate": None}, DEFAULTS, config_file
    )
    # flags > config file > defaults
    assert run_config["seed"] == 4
    assert run_config["epochs"] == 2
    assert run_config["learning_rate"] == 3e-4
    assert run_config.config_file == config_file


@pytest.mark.METHODS
def test_resolve_unknown_key(tmp_path):
    config_file = str(tmp_path / "run.json")
    with open(config_file, "w") as json_file:
        json.dump({"epoch": 2}, json_file)
    with pytest.raises(UsageError, match="epoch"):
        RunConfig.resolve("train", {}, DEFAULTS, config_file)


@pytest.mark.METHODS
def test_resolve_not_an_object(tmp_path):
    config_file = str(tmp_path / "run.json")
    with open(config_file, "w") as json_file:
        json.dump([1, 2], json_file)
    with pytest.raises(UsageError):
        RunConfig.resolve("train", {}, DEFAULTS, config_file)


@pytest.mark.METHODS
def test_get_hyperparameters():
    run_config = RunConfig.resolve("train", {"epochs": 3}, DEFAULTS)
    hp = run_config.get_hyperparameters()
    assert hp.epochs == 3
    assert hp.learning_rate == 3e-4
    assert hp.batch_size == 32

import pytest

from QAHeadTool.Classes._check import CheckMinError
from QAHeadTool.Classes.Hyperparameters import Hyperparameters
from QAHeadTool.Functions.load import load
from QAHeadTool.Functions.Training import TOY_PRESET


@pytest.mark.METHODS
def test_total_steps():
    assert Hyperparameters(epochs=3, batch_size=16).get_total_steps(100) == 21
    assert Hyperparameters(epochs=1, batch_size=4).get_total_steps(16) == 4


@pytest.mark.METHODS
def test_toy_preset():
    hp = Hyperparameters(init_dict=dict(TOY_PRESET))
    assert hp.max_seq_len == 96
    assert hp.as_dict()["sequence_length"] == 96
    assert Hyperparameters(init_dict=hp.as_dict()) == hp


@pytest.mark.METHODS
def test_save_load(tmp_path):
    hp = Hyperparameters(epochs=2, batch_size=8, seed=3)
    file_path = hp.save(str(tmp_path / "hp"))
    assert file_path.endswith("hp.json")
    assert load(file_path) == hp


@pytest.mark.METHODS
def test_copy_override():
    hp = Hyperparameters(epochs=2)
    other = hp.copy(epochs=4)
    assert other.epochs == 4 and hp.epochs == 2
    assert other.batch_size == hp.batch_size
    with pytest.raises(AttributeError, match="no property 'epoch'"):
        hp.copy(epoch=4)
    with pytest.raises(CheckMinError):
        hp.copy(epochs=0)

import numpy as np
import pytest

from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes._check import CheckDimError
from QAHeadTool.Functions import UsageError


@pytest.mark.METHODS
def test_from_string():
    mask = HeadMask.from_string("1:0, 0:3", 2, 4)
    assert mask.get_masked_heads() == [(0, 3), (1, 0)]
    assert mask.keep.sum() == 6


@pytest.mark.METHODS
def test_from_empty_string():
    mask = HeadMask.from_string("", 2, 2)
    assert mask.keep.all()
    assert mask == HeadMask(n_layers=2, n_heads=2)


@pytest.mark.METHODS
@pytest.mark.parametrize("text", ["9:0", "0:2", "-1:0", "a:b", "1", "0:0:0"])
def test_from_string_errors(text):
    with pytest.raises(UsageError):
        HeadMask.from_string(text, 2, 2)


@pytest.mark.METHODS
def test_leave_one_out():
    mask = HeadMask.leave_one_out(3, 2, 2, 1)
    assert mask.get_masked_heads() == [(2, 1)]
    assert np.count_nonzero(~mask.keep) == 1


@pytest.mark.METHODS
def test_check_geometry():
    mask = HeadMask(n_layers=2, n_heads=4)
    mask.check(ModelConfig(n_layers=2, n_heads=4))
    with pytest.raises(CheckDimError):
        mask.check(ModelConfig(n_layers=3, n_heads=4))

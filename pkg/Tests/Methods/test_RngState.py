import numpy as np
import pytest

from QAHeadTool.Classes.RngState import RngState
from QAHeadTool.Classes._check import CheckError
from QAHeadTool.Functions.Numerics.rng import make_rng


@pytest.mark.METHODS
def test_get_generator_restarts():
    state = RngState(seed=42, stream=[3])
    assert np.array_equal(state.get_generator().random(5), state.get_generator().random(5))
    assert np.array_equal(state.get_generator().random(5), make_rng(42, (3,)).random(5))


@pytest.mark.METHODS
def test_spawn():
    children = RngState(seed=7).spawn(3)
    assert [child.stream for child in children] == [[0], [1], [2]]
    draws = [child.get_generator().random(4) for child in children]
    assert not np.array_equal(draws[0], draws[1])
    assert np.array_equal(draws[2], make_rng(7, (2,)).random(4))
    grandchild = children[1].spawn(2)[1]
    assert grandchild.stream == [1, 1]


@pytest.mark.METHODS
def test_seed_range():
    RngState(seed=2**64 - 1)
    with pytest.raises(CheckError):
        RngState(seed=-1)
    with pytest.raises(CheckError):
        RngState(seed=2**64)

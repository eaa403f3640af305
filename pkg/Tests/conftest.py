from os.path import dirname, join

import matplotlib
import pytest

from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.SyntheticSpec import SyntheticSpec
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Model.init_parameters import init_parameters
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.synthetic import generate_synthetic

matplotlib.use("Agg")

DATA_DIR = join(dirname(__file__), "Data")

# Window of the bundled BoolQ / SQuAD fixtures
FIXTURE_SEQ_LEN = 80


def make_params(geometry="gradcheck", regime="all", max_seq_len=48, seed=0):
    """Randomly initialized weights of a preset geometry"""
    config = ModelConfig(max_seq_len=max_seq_len, **geometry_presets[geometry])
    config = config.for_regime(regime)
    return init_parameters(config, make_rng(seed, stream=(0,)), seed)


def make_synthetic(task, n_samples=12, seed=0, answerable_fraction=0.5):
    """Small synthetic Task A / Task B dataset fitting in 40 tokens"""
    spec = SyntheticSpec(
        n_samples=n_samples,
        context_len=16,
        seed=seed,
        answerable_fraction=answerable_fraction,
        max_seq_len=40,
    )
    return generate_synthetic(spec, task, split="dev")


@pytest.fixture
def tiny_params():
    return make_params()


@pytest.fixture
def dataset_a():
    return make_synthetic("A")


@pytest.fixture
def dataset_b():
    return make_synthetic("B")

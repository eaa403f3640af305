from logging import getLogger

from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Functions.Eval.evaluate import evaluate
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Training.train import train


def train_discriminator(train_data, dev_data, hp, out_dir=None):
    """Train the tiny question type model (boolean vs extractive questions)

    Parameters
    ----------
    train_data : Dataset
        question_type samples
    dev_data : Dataset
        held-out question_type samples
    hp : Hyperparameters
        training settings
    out_dir : str
        checkpoint directory (None: nothing written)

    Returns
    -------
    report : TrainReport
        training summary
    params : Parameters
        trained weights
    accuracy : float
        held-out accuracy
    """
    config = ModelConfig(**geometry_presets["tiny"])
    report, params = train(
        "question_type", train_data, hp, config=config, out_dir=out_dir
    )
    metrics = evaluate(params, dev_data)
    getLogger(__name__).info("question type model: held-out %s", metrics)
    return report, params, metrics.accuracy

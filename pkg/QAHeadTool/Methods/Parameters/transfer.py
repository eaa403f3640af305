from logging import getLogger

from QAHeadTool.Classes.Parameter import Parameter
from QAHeadTool.Functions.Model import HEAD_PREFIX, init_tensor, parameter_shapes


def transfer(self, regime, rng):
    """Returns the weights of this model adapted to another regime
    Backbone tensors are copied. Task head tensors are freshly initialized
    whenever the regime changes.
    Parameters
    ----------
    self: Parameters
        a Parameters object (source checkpoint)
    regime: str
        boolq, squad, all or question_type
    rng: numpy.random.Generator
        stream used for the re-initialized heads
    Returns
    -------
    params: Parameters
        weights for the new regime
    """
    config = self.config.for_regime(regime)
    tensors = list()
    reset = list()
    for name, shape in parameter_shapes(config):
        is_reset = name.startswith(HEAD_PREFIX) and regime != self.config.regime
        is_kept = name in self.tensors and self.tensors[name].value.shape == shape
        if is_kept and not is_reset:
            value = self.tensors[name].value.copy()
        else:
            value = init_tensor(name, shape, rng)
            reset.append(name)
        tensors.append(Parameter(name=name, value=value))
    getLogger(__name__).info(
        "transfer to %s: %d tensors kept, re-initialized %s",
        regime,
        len(tensors) - len(reset),
        reset,
    )
    return type(self)(config=config, tensors=tensors, seed=self.seed)

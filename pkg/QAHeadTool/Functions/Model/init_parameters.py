
from QAHeadTool.Classes.Parameter import Parameter
from QAHeadTool.Classes.Parameters import Parameters
from QAHeadTool.Functions.Model import init_tensor, parameter_shapes


def init_parameters(config, rng, seed=0):
    """Draw a fresh weight set for a ModelConfig

    Parameters
    ----------
    config : ModelConfig
        geometry and answer space
    rng : numpy.random.Generator
        initialization stream
    seed : int
        seed recorded in the checkpoint manifest

    Returns
    -------
    params : Parameters
        every tensor of parameter_shapes(config)
    """
    config.check()
    tensors = [
        Parameter(name=name, value=init_tensor(name, shape, rng))
        for name, shape in parameter_shapes(config)
    ]
    return Parameters(config=config, tensors=tensors, seed=seed)

import numpy as np

# Geometries (n_layers, hidden_dim, n_heads)
geometry_presets = {
    "gradcheck": {"n_layers": 2, "hidden_dim": 16, "n_heads": 2},
    "tiny": {"n_layers": 2, "hidden_dim": 128, "n_heads": 2},
    "desk": {"n_layers": 2, "hidden_dim": 64, "n_heads": 4},
    "base": {"n_layers": 12, "hidden_dim": 768, "n_heads": 12},
    "large": {"n_layers": 24, "hidden_dim": 1024, "n_heads": 16},
}

HEAD_PREFIX = "heads."


def parameter_shapes(config):
    """Ordered (name, shape) list of every tensor of a ModelConfig

    Parameters
    ----------
    config : ModelConfig
        geometry and answer space

    Returns
    -------
    shapes : list
        list of (name, shape) in registration (and checkpoint) order
    """
    d, f = config.hidden_dim, config.ffn_dim
    shapes = [
        ("embeddings.token", (config.vocab_size, d)),
        ("embeddings.position", (config.max_seq_len, d)),
    ]
    for layer in range(config.n_layers):
        prefix = "layers." + str(layer) + "."
        shapes += [
            (prefix + "ln_1.gain", (d,)),
            (prefix + "ln_1.bias", (d,)),
            (prefix + "attention.query.weight", (d, d)),
            (prefix + "attention.query.bias", (d,)),
            (prefix + "attention.key.weight", (d, d)),
            (prefix + "attention.key.bias", (d,)),
            (prefix + "attention.value.weight", (d, d)),
            (prefix + "attention.value.bias", (d,)),
            (prefix + "attention.output.weight", (d, d)),
            (prefix + "attention.output.bias", (d,)),
            (prefix + "ln_2.gain", (d,)),
            (prefix + "ln_2.bias", (d,)),
            (prefix + "ffn.input.weight", (d, f)),
            (prefix + "ffn.input.bias", (f,)),
            (prefix + "ffn.output.weight", (f, d)),
            (prefix + "ffn.output.bias", (d,)),
        ]
    shapes += [("final_ln.gain", (d,)), ("final_ln.bias", (d,))]
    shapes += [
        (HEAD_PREFIX + "answer.weight", (d, config.answer_categories)),
        (HEAD_PREFIX + "answer.bias", (config.answer_categories,)),
    ]
    if config.span_heads_enabled:
        shapes += [
            (HEAD_PREFIX + "span_start.weight", (d, 1)),
            (HEAD_PREFIX + "span_start.bias", (1,)),
            (HEAD_PREFIX + "span_end.weight", (d, 1)),
            (HEAD_PREFIX + "span_end.bias", (1,)),
        ]
    return shapes


def init_tensor(name, shape, rng):
    """Initial value of a tensor from its name

    Embeddings ~ N(0, 1), weights ~ N(0, 1/fan_in), biases 0, layer norm gains 1
    """
    if name.endswith(".gain"):
        return np.ones(shape)
    if name.endswith(".bias"):
        return np.zeros(shape)
    if name.startswith("embeddings."):
        return rng.standard_normal(shape)
    return rng.standard_normal(shape) / np.sqrt(shape[0])

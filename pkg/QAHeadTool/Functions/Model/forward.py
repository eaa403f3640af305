"""Pre-norm transformer encoder with maskable heads and the f_a, f_s, f_e heads"""
import numpy as np

from QAHeadTool.Classes.ModelOutputs import ModelOutputs
from QAHeadTool.Functions import DimensionError, NumericError, UsageError, regime_categories
from QAHeadTool.Functions.Numerics import autograd as ag
from QAHeadTool.Functions.Numerics.matrix import softmax_rows
from QAHeadTool.Functions.tokenizer import PAD_ID


def build_batch(samples, config):
    """Pad a list of EncodedSample into model inputs

    Parameters
    ----------
    samples : list
        list of EncodedSample
    config : ModelConfig
        geometry (max_seq_len)

    Returns
    -------
    ids : ndarray
        (B, T) token ids, PAD after the end of each sample
    valid : ndarray
        (B, T) True on the real (unpadded) positions
    context : ndarray
        (B, T) True on the context region of each sample
    """
    lengths = [len(sample) for sample in samples]
    n_tokens = max(lengths)
    if n_tokens > config.max_seq_len:
        raise DimensionError(
            "Sample of "
            + str(n_tokens)
            + " tokens exceeds max_seq_len "
            + str(config.max_seq_len)
        )
    ids = np.full((len(samples), n_tokens), PAD_ID, dtype=np.int64)
    valid = np.zeros((len(samples), n_tokens), dtype=bool)
    context = np.zeros((len(samples), n_tokens), dtype=bool)
    for row, sample in enumerate(samples):
        ids[row, : lengths[row]] = sample.token_ids
        valid[row, : lengths[row]] = True
        context[row, sample.context_start : sample.context_end] = True
    return ids, valid, context


def _linear(x, params, name):
    return ag.add(ag.matmul(x, params[name + ".weight"]), params[name + ".bias"])


def attention_head(q_rows, k_rows, v_rows, keep, valid=None):
    """Output of a single attention head

    Parameters
    ----------
    q_rows : ndarray
        (T, head_dim) queries
    k_rows : ndarray
        (T, head_dim) keys
    v_rows : ndarray
        (T, head_dim) values
    keep : bool
        False to mask the head
    valid : ndarray
        (T,) True on the unpadded positions (None: all positions)

    Returns
    -------
    out : ndarray
        (T, head_dim) per token outputs, exact zeros when keep is False
    """
    q_rows = np.asarray(q_rows, dtype=np.float64)
    k_rows = np.asarray(k_rows, dtype=np.float64)
    v_rows = np.asarray(v_rows, dtype=np.float64)
    if q_rows.shape != k_rows.shape or k_rows.shape[0] != v_rows.shape[0]:
        raise DimensionError(
            "Inconsistent q "
            + str(q_rows.shape)
            + ", k "
            + str(k_rows.shape)
            + " and v "
            + str(v_rows.shape)
        )
    if not keep:
        return np.zeros(v_rows.shape)
    support = None
    if valid is not None:
        support = np.broadcast_to(valid, (q_rows.shape[0], k_rows.shape[0]))
    probs = softmax_rows(q_rows @ k_rows.T / np.sqrt(q_rows.shape[1]), support)
    return probs @ v_rows


def forward_tensors(
    params, ids, valid, context, keep=None, mode="eval", rng=None, trace=False
):
    """Batched forward pass recorded on the differentiation tape

    Parameters
    ----------
    params : Parameters
        weights (their ModelConfig gives the geometry)
    ids : ndarray
        (B, T) token ids
    valid : ndarray
        (B, T) unpadded positions
    context : ndarray
        (B, T) span support
    keep : ndarray
        (L, H) kept heads (None keeps every head)
    mode : str
        "train" (dropout on, rng required) or "eval"
    rng : numpy.random.Generator
        dropout stream
    trace : bool
        True to return the attention probabilities of every layer

    Returns
    -------
    outputs : dict
        Tensors "answer" (B, K), "start" and "end" (B, T) when the span heads
        are enabled, and "trace" the list of (B, H, T, T) attention arrays
    """
    config = params.config
    if mode not in ["train", "eval"]:
        raise UsageError('mode must be "train" or "eval", ' + repr(mode) + " given")
    if keep is None:
        keep = np.ones((config.n_layers, config.n_heads), dtype=bool)
    if keep.shape != (config.n_layers, config.n_heads):
        raise DimensionError(
            "HeadMask "
            + str(keep.shape)
            + " does not match the "
            + str((config.n_layers, config.n_heads))
            + " geometry"
        )
    if ids.shape[1] > config.max_seq_len:
        raise DimensionError(
            str(ids.shape[1]) + " positions exceed max_seq_len " + str(config.max_seq_len)
        )
    rate = config.dropout_rate if mode == "train" else 0.0
    if rate > 0 and rng is None:
        raise UsageError("train mode needs a dropout rng")
    leaves = {param.name: ag.Tensor.from_parameter(param) for param in params}
    n_batch, n_tokens = ids.shape
    n_heads, head_dim = config.n_heads, config.head_dim

    x = ag.add(
        ag.embedding(leaves["embeddings.token"], ids),
        ag.embedding(leaves["embeddings.position"], np.arange(n_tokens)),
    )
    x = ag.dropout(x, rate, rng)
    key_support = valid[:, None, None, :]
    attentions = list()
    for layer in range(config.n_layers):
        prefix = "layers." + str(layer) + "."
        h = ag.layer_norm(x, leaves[prefix + "ln_1.gain"], leaves[prefix + "ln_1.bias"])
        split = list()
        for proj in ["query", "key", "value"]:
            y = _linear(h, leaves, prefix + "attention." + proj)
            y = ag.reshape(y, (n_batch, n_tokens, n_heads, head_dim))
            split.append(ag.transpose(y, (0, 2, 1, 3)))
        q, k, v = split
        scores = ag.scale(
            ag.matmul(q, ag.transpose(k, (0, 1, 3, 2))), 1.0 / np.sqrt(head_dim)
        )
        probs = ag.head_mask(ag.masked_softmax(scores, key_support), keep[layer])
        attentions.append(probs.value)
        heads = ag.matmul(ag.dropout(probs, rate, rng), v)
        heads = ag.reshape(
            ag.transpose(heads, (0, 2, 1, 3)), (n_batch, n_tokens, config.hidden_dim)
        )
        x = ag.add(x, ag.dropout(_linear(heads, leaves, prefix + "attention.output"), rate, rng))
        h = ag.layer_norm(x, leaves[prefix + "ln_2.gain"], leaves[prefix + "ln_2.bias"])
        h = ag.gelu(_linear(h, leaves, prefix + "ffn.input"))
        x = ag.add(x, ag.dropout(_linear(h, leaves, prefix + "ffn.output"), rate, rng))
        if not np.all(np.isfinite(x.value)):
            raise NumericError("Non finite activation in layer " + str(layer))

    x = ag.layer_norm(x, leaves["final_ln.gain"], leaves["final_ln.bias"])
    first = ag.take(x, (slice(None), 0, slice(None)))
    answer_logits = _linear(first, leaves, "heads.answer")
    outputs = {
        "answer": ag.masked_softmax(answer_logits, np.ones(answer_logits.shape, dtype=bool))
    }
    if config.span_heads_enabled:
        for key, name in [("start", "heads.span_start"), ("end", "heads.span_end")]:
            logits = ag.reshape(_linear(x, leaves, name), (n_batch, n_tokens))
            outputs[key] = ag.masked_softmax(logits, context)
    if not np.all(np.isfinite(outputs["answer"].value)):
        raise NumericError("Non finite answer distribution")
    if trace:
        outputs["trace"] = attentions
    return outputs


def forward(params, sample, mask=None, mode="eval", rng=None, trace=False):
    """Output distributions of one sample

    Parameters
    ----------
    params : Parameters
        weights and their ModelConfig
    sample : EncodedSample
        encoded input
    mask : HeadMask
        heads to zero (None keeps every head)
    mode : str
        "train" or "eval" (dropout only in train mode)
    rng : numpy.random.Generator
        dropout stream (train mode)
    trace : bool
        True to keep the per layer per head attention matrices

    Returns
    -------
    outputs : ModelOutputs
        f_a, f_s, f_e (and the trace)
    """
    config = params.config
    keep = None
    if mask is not None:
        mask.check(config)
        keep = mask.keep
    ids, valid, context = build_batch([sample], config)
    out = forward_tensors(params, ids, valid, context, keep, mode, rng, trace)
    return ModelOutputs(
        f_a=out["answer"].value[0],
        f_s=out["start"].value[0] if "start" in out else None,
        f_e=out["end"].value[0] if "end" in out else None,
        trace=[probs[0] for probs in out["trace"]] if trace else None,
        categories=list(regime_categories[config.regime]),
        context_start=sample.context_start,
        context_end=sample.context_end,
    )

from os.path import isdir, isfile, join

from QAHeadTool.Functions.Load.load_boolq import load_boolq
from QAHeadTool.Functions.Load.load_json import LoadMissingFileError
from QAHeadTool.Functions.Load.load_jsonl_dataset import load_jsonl_dataset
from QAHeadTool.Functions.Load.load_squad import load_squad
from QAHeadTool.Functions.Numerics.rng import make_rng

# Shuffling stream of the all-purpose mix
MIX_STREAM = 11


def boolq_candidates(data_dir, split):
    return [
        (join(data_dir, "boolq", split + ".jsonl"), "boolq"),
        (join(data_dir, "boolq_" + split + ".jsonl"), "boolq"),
        (join(data_dir, "synthetic_B_" + split + ".jsonl"), "synthetic-B"),
    ]


def squad_candidates(data_dir, split):
    return [
        (join(data_dir, "squad", split + "-v2.0.json"), "squad"),
        (join(data_dir, split + "-v2.0.json"), "squad"),
        (join(data_dir, "synthetic_A_" + split + ".jsonl"), "synthetic-A"),
    ]


def _load_first(candidates, max_seq_len, split):
    for file_path, provenance in candidates:
        if not isfile(file_path):
            continue
        if provenance == "boolq":
            return load_boolq(file_path, max_seq_len, split)
        if provenance == "squad":
            return load_squad(file_path, max_seq_len, split)
        return load_jsonl_dataset(file_path, max_seq_len, split, provenance)
    raise LoadMissingFileError(
        "None of " + ", ".join(path for path, _ in candidates) + " exists"
    )


def resolve_task_data(data_dir, task, split, max_seq_len, seed=0):
    """Locate and load the data of a regime under a data directory

    BoolQ data is read from boolq/<split>.jsonl, boolq_<split>.jsonl or
    synthetic_B_<split>.jsonl; SQuAD data from squad/<split>-v2.0.json,
    <split>-v2.0.json or synthetic_A_<split>.jsonl (first file found).

    Parameters
    ----------
    data_dir : str
        data directory
    task : str
        boolq, squad or all (the two shuffled together)
    split : str
        train or dev
    max_seq_len : int
        encoding window
    seed : int
        seed of the all-purpose shuffle

    Returns
    -------
    dataset : Dataset
        samples of the regime
    """
    if task == "boolq":
        return _load_first(boolq_candidates(data_dir, split), max_seq_len, split)
    if task == "squad":
        return _load_first(squad_candidates(data_dir, split), max_seq_len, split)
    squad = _load_first(squad_candidates(data_dir, split), max_seq_len, split)
    boolq = _load_first(boolq_candidates(data_dir, split), max_seq_len, split)
    return squad.mix_and_shuffle(boolq, make_rng(seed, stream=(MIX_STREAM,)))


def load_data_path(data_path, task, split, max_seq_len, seed=0):
    """Load the data of a regime from a data directory or from one file

    A directory goes through resolve_task_data. A .json file is read as
    SQuAD 2.0; a .jsonl file as the synthetic format when its first record
    holds a span_text key, as BoolQ otherwise.

    Returns
    -------
    dataset : Dataset
        samples of the regime
    """
    if isdir(data_path):
        return resolve_task_data(data_path, task, split, max_seq_len, seed)
    if not isfile(data_path):
        raise LoadMissingFileError(str(data_path) + " doesn't exist")
    if data_path.endswith(".json"):
        return load_squad(data_path, max_seq_len, split)
    with open(data_path, "r", encoding="utf-8") as data_file:
        first_line = data_file.readline()
    if '"span_text"' in first_line:
        return load_jsonl_dataset(data_path, max_seq_len, split, "jsonl")
    return load_boolq(data_path, max_seq_len, split)

from logging import getLogger
from os.path import join
from time import perf_counter

from QAHeadTool.Classes.Hyperparameters import Hyperparameters
from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.SyntheticSpec import SyntheticSpec
from QAHeadTool.Functions.Headlens.rank_heads import rank_heads
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.synthetic import generate_synthetic
from QAHeadTool.Functions.Training import TOY_PRESET
from QAHeadTool.Functions.Training.train import train

# Rng streams of the experiment, apart from the training ones
SPLIT_STREAM_A = 21
SPLIT_STREAM_B = 22
MIX_STREAM = 23

# Masking the top Task A head must cost at least MIN_OWN_COST F1 points on
# Task A and less than MAX_OTHER_COST accuracy points on Task B
MIN_OWN_COST = 5.0
MAX_OTHER_COST = 2.0

logger = getLogger(__name__)


def run_specialization(
    seed,
    n_samples=5000,
    dev_fraction=0.2,
    hp=None,
    config=None,
    n_jobs=1,
    out_dir=None,
):
    """Train an all-purpose model on synthetic Task A + Task B and check that
    its heads specialize

    Parameters
    ----------
    seed : int
        seed of the data, the split and the training run
    n_samples : int
        samples generated per task (split into train and dev)
    dev_fraction : float
        share of each task held out for ranking
    hp : Hyperparameters
        training settings (TOY_PRESET with seed by default)
    config : ModelConfig
        geometry (desk geometry by default)
    n_jobs : int
        joblib workers of rank_heads
    out_dir : str
        directory receiving the checkpoint, the two importance CSVs and
        their heatmaps (None: nothing written)

    Returns
    -------
    report : dict
        baselines, comparison of the two matrices, cost of masking the top
        Task A head on both tasks and the is_specialized verdict
    """
    start_time = perf_counter()
    if hp is None:
        hp = Hyperparameters(init_dict=dict(TOY_PRESET, seed=seed))
    if config is None:
        config = ModelConfig(**geometry_presets["desk"])
    spec = SyntheticSpec(n_samples=n_samples, seed=seed, max_seq_len=hp.max_seq_len)
    train_a, dev_a = generate_synthetic(spec, "A").train_dev_split(
        dev_fraction, make_rng(seed, stream=(SPLIT_STREAM_A,))
    )
    train_b, dev_b = generate_synthetic(spec, "B").train_dev_split(
        dev_fraction, make_rng(seed, stream=(SPLIT_STREAM_B,))
    )
    train_data = train_a.mix_and_shuffle(train_b, make_rng(seed, stream=(MIX_STREAM,)))

    ckpt_dir = None if out_dir is None else join(out_dir, "all")
    train_report, params = train("all", train_data, hp, config=config, out_dir=ckpt_dir)
    checkpoint_id = "all-seed" + str(seed)
    matrix_a = rank_heads(params, dev_a, "f1", n_jobs=n_jobs, checkpoint_id=checkpoint_id)
    matrix_b = rank_heads(
        params, dev_b, "accuracy", n_jobs=n_jobs, checkpoint_id=checkpoint_id
    )
    comparison = matrix_a.compare_tasks(matrix_b)
    top_a = tuple(comparison["top1_a"])
    own_cost = -float(matrix_a.deltas[top_a])
    other_cost = -float(matrix_b.deltas[top_a])
    report = {
        "seed": seed,
        "baseline_f1_a": matrix_a.baseline,
        "baseline_accuracy_b": matrix_b.baseline,
        "final_loss": train_report.epoch_losses[-1],
        "comparison": comparison,
        "top_a_cost_on_a": own_cost,
        "top_a_cost_on_b": other_cost,
        "is_specialized": comparison["distinct_top1"]
        and own_cost >= MIN_OWN_COST
        and other_cost < MAX_OTHER_COST,
    }
    if out_dir is not None:
        for matrix, name in [(matrix_a, "importance_A"), (matrix_b, "importance_B")]:
            matrix.save_csv(join(out_dir, name + ".csv"))
            matrix.plot_heatmap(join(out_dir, name + ".svg"))
    report["wall_clock"] = perf_counter() - start_time
    logger.info(
        "seed %d: top A %s, top B %s, masking top A costs %.2f F1 on A and %.2f "
        "accuracy on B (specialized: %s)",
        seed,
        comparison["top1_a"],
        comparison["top1_b"],
        own_cost,
        other_cost,
        report["is_specialized"],
    )
    return report

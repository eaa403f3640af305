"""Command line surface: train, eval, rank-heads, compare, plot, synth,
specialize and discriminate

Exit codes: 0 success, 2 usage or input error, 3 numeric failure.
"""

import argparse
import json
import logging
import sys
from os import makedirs
from os.path import dirname, join, normpath, splitext

import matplotlib

from QAHeadTool import __version__
from QAHeadTool.Classes._check import CheckError
from QAHeadTool.Classes._frozen import FrozenError
from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.RunConfig import RunConfig
from QAHeadTool.Classes.SyntheticSpec import SyntheticSpec
from QAHeadTool.Functions import NumericError, QAError, UsageError
from QAHeadTool.Functions.Headlens import task_metrics
from QAHeadTool.Functions.Load.load_json import LoadJSONError, LoadMissingFileError
from QAHeadTool.Functions.load import LoadWrongDictClassError, LoadWrongTypeError
from QAHeadTool.Functions.Model import geometry_presets
from QAHeadTool.Functions.Training import TOY_PRESET

logger = logging.getLogger("QAHeadTool.cli")

INPUT_ERRORS = (
    QAError,
    CheckError,
    FrozenError,
    LoadJSONError,
    LoadMissingFileError,
    LoadWrongDictClassError,
    LoadWrongTypeError,
)

# Split stream of the question type data
QUESTION_SPLIT_STREAM = 31

# Regime of the data each training task reads
TASK_CHOICES = ["boolq", "squad", "all"]

HP_DEFAULTS = {key: value for key, value in TOY_PRESET.items()}

COMMAND_DEFAULTS = {
    "train": dict(
        HP_DEFAULTS,
        task="all",
        data_dir="data",
        init=None,
        out="runs/checkpoint",
        geometry="desk",
    ),
    "eval": {
        "ckpt": None,
        "task": "all",
        "data": "data",
        "mask": "",
        "out": None,
        "predictions": None,
        "trace": None,
        "trace_index": 0,
    },
    "rank-heads": {
        "ckpt": None,
        "task": "all",
        "data": "data",
        "metric": None,
        "jobs": 1,
        "out": "importance.csv",
        "summary": None,
    },
    "compare": {"a": None, "b": None, "out": None, "single": False},
    "plot": {"input": None, "out": "heatmap.svg", "title": None},
    "synth": {
        "task": "A",
        "n": 1000,
        "seed": 0,
        "out": None,
        "split": "train",
        "context_len": 48,
        "answerable_fraction": 0.5,
        "answer_len": 3,
        "n_distractors": 3,
        "sequence_length": 96,
    },
    "specialize": dict(HP_DEFAULTS, seeds=[0, 1, 2], n=5000, jobs=1, out=None),
    "discriminate": dict(HP_DEFAULTS, n=2000, data_dir=None, out=None),
}


def get_parser():
    """Build the argparse parser of every sub-command"""
    parser = argparse.ArgumentParser(
        prog="qaheadtool",
        description="All-purpose QA tiny transformers and attention head importance",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug level logging"
    )
    parser.add_argument("--config", default=None, help="JSON file of options")
    subparsers = parser.add_subparsers(dest="command", required=True)

    train = subparsers.add_parser("train", help="fine-tune a model on a regime")
    train.add_argument("--task", choices=TASK_CHOICES)
    train.add_argument("--data-dir", dest="data_dir")
    train.add_argument("--seed", type=int)
    train.add_argument("--init", help="checkpoint to start from (transfer mode)")
    train.add_argument("--out", help="output directory")
    train.add_argument("--geometry", choices=sorted(geometry_presets))
    train.add_argument("--epochs", type=int)
    train.add_argument("--batch-size", dest="batch_size", type=int)
    train.add_argument("--learning-rate", dest="learning_rate", type=float)

    evaluate = subparsers.add_parser("eval", help="dev metrics under a head mask")
    evaluate.add_argument("--ckpt")
    evaluate.add_argument("--task", choices=TASK_CHOICES)
    evaluate.add_argument("--data", help="data directory or file")
    evaluate.add_argument("--mask", help='masked heads, "layer:head,layer:head"')
    evaluate.add_argument("--out", help="metrics JSON file (stdout only if absent)")
    evaluate.add_argument("--predictions", help="per-sample TSV file")
    evaluate.add_argument("--trace", help="HDF5 attention trace of one sample")
    evaluate.add_argument("--trace-index", dest="trace_index", type=int)

    rank = subparsers.add_parser("rank-heads", help="leave-one-out head importance")
    rank.add_argument("--ckpt")
    rank.add_argument("--task", choices=TASK_CHOICES)
    rank.add_argument("--data", help="data directory or file")
    rank.add_argument("--metric", choices=["accuracy", "f1"])
    rank.add_argument("--jobs", type=int)
    rank.add_argument("--out", help="importance CSV")
    rank.add_argument("--summary", help="layer summary JSON")

    compare = subparsers.add_parser("compare", help="compare two importance CSVs")
    compare.add_argument("--a")
    compare.add_argument("--b")
    compare.add_argument("--out", help="report JSON file")
    compare.add_argument(
        "--single",
        action="store_true",
        default=None,
        help="b comes from a single-task model",
    )

    plot = subparsers.add_parser("plot", help="SVG heatmap of an importance CSV")
    plot.add_argument("--in", dest="input")
    plot.add_argument("--out")
    plot.add_argument("--title")

    synth = subparsers.add_parser("synth", help="write a synthetic dataset")
    synth.add_argument("--task", choices=["A", "B", "Q"])
    synth.add_argument("--n", type=int)
    synth.add_argument("--seed", type=int)
    synth.add_argument("--out")
    synth.add_argument("--split", choices=["train", "dev"])

    specialize = subparsers.add_parser("specialize", help="head specialization runs")
    specialize.add_argument("--seeds", type=int, nargs="+")
    specialize.add_argument("--n", type=int, help="samples per synthetic task")
    specialize.add_argument("--jobs", type=int)
    specialize.add_argument("--out")

    discriminate = subparsers.add_parser("discriminate", help="question type model")
    discriminate.add_argument("--n", type=int)
    discriminate.add_argument("--seed", type=int)
    discriminate.add_argument("--data-dir", dest="data_dir")
    discriminate.add_argument("--out")
    return parser


def write_json(data, file_path=None):
    """Print data as JSON on stdout and write it to file_path if given"""
    text = json.dumps(data, sort_keys=True, indent=2)
    print(text)
    if file_path:
        if dirname(file_path) != "":
            makedirs(dirname(file_path), exist_ok=True)
        with open(file_path, "w", encoding="utf-8") as json_file:
            json_file.write(text + "\n")


def require(run_config, *keys):
    """Raise a UsageError naming the first missing option"""
    for key in keys:
        if run_config[key] is None:
            raise UsageError("--" + key.replace("_", "-") + " is required")


def cmd_train(run_config):
    from QAHeadTool.Functions.Load.resolve_task_data import resolve_task_data
    from QAHeadTool.Functions.Training.train import train

    hp = run_config.get_hyperparameters()
    task = run_config["task"]
    train_data = resolve_task_data(
        run_config["data_dir"], task, "train", hp.max_seq_len, hp.seed
    )
    try:
        dev_data = resolve_task_data(
            run_config["data_dir"], task, "dev", hp.max_seq_len, hp.seed
        )
    except LoadMissingFileError:
        logger.info(
            "no dev data under %s, training without dev metrics", run_config["data_dir"]
        )
        dev_data = None
    config = ModelConfig(**geometry_presets[run_config["geometry"]])
    report, _ = train(
        task,
        train_data,
        hp,
        init=run_config["init"],
        config=config,
        dev_data=dev_data,
        out_dir=run_config["out"],
    )
    write_json(report.as_dict())


def cmd_eval(run_config):
    from QAHeadTool.Functions.Eval.evaluate import evaluate, write_predictions_tsv
    from QAHeadTool.Functions.Load.load_checkpoint import load_checkpoint
    from QAHeadTool.Functions.Load.resolve_task_data import load_data_path
    from QAHeadTool.Functions.Model.forward import forward

    require(run_config, "ckpt")
    params = load_checkpoint(run_config["ckpt"])
    config = params.config
    mask = HeadMask.from_string(run_config["mask"], config.n_layers, config.n_heads)
    dataset = load_data_path(
        run_config["data"], run_config["task"], "dev", config.max_seq_len
    )
    metrics, rows = evaluate(params, dataset, mask=mask, return_rows=True)
    if run_config["predictions"]:
        write_predictions_tsv(rows, run_config["predictions"])
    if run_config["trace"]:
        index = run_config["trace_index"]
        if not 0 <= index < len(dataset):
            raise UsageError("--trace-index " + str(index) + " outside the dataset")
        outputs = forward(params, dataset[index], mask=mask, trace=True)
        outputs.save_trace(run_config["trace"])
    result = metrics.as_dict()
    result["mask"] = [list(head) for head in mask.get_masked_heads()]
    write_json(result, run_config["out"])


def cmd_rank_heads(run_config):
    from QAHeadTool.Functions.Headlens.rank_heads import rank_heads
    from QAHeadTool.Functions.Load.load_checkpoint import load_checkpoint
    from QAHeadTool.Functions.Load.resolve_task_data import load_data_path

    require(run_config, "ckpt")
    params = load_checkpoint(run_config["ckpt"])
    dataset = load_data_path(
        run_config["data"], run_config["task"], "dev", params.config.max_seq_len
    )
    metric = run_config["metric"]
    if metric is None:
        metrics = set(task_metrics[sample.task] for sample in dataset)
        if len(metrics) != 1:
            raise UsageError(
                "--metric is required for a dataset scored by " + str(sorted(metrics))
            )
        metric = metrics.pop()
    matrix = rank_heads(
        params,
        dataset,
        metric,
        n_jobs=run_config["jobs"],
        checkpoint_id=normpath(run_config["ckpt"]),
    )
    matrix.save_csv(run_config["out"])
    summary_path = run_config["summary"]
    if summary_path is None:
        summary_path = splitext(run_config["out"])[0] + "_layer_summary.json"
    matrix.layer_summary().save(summary_path)
    print(matrix)


def cmd_compare(run_config):
    from QAHeadTool.Functions.Load.load_importance_csv import load_importance_csv

    require(run_config, "a", "b")
    matrix_a = load_importance_csv(run_config["a"])
    matrix_b = load_importance_csv(run_config["b"])
    if run_config["single"]:
        report = matrix_a.compare_single_and_multi(matrix_b)
    else:
        # Both CSVs come from one checkpoint; its id is not stored in the CSV
        report = matrix_a.compare_tasks(matrix_b)
    write_json(report, run_config["out"])


def cmd_plot(run_config):
    from QAHeadTool.Functions.Load.load_importance_csv import load_importance_csv

    require(run_config, "input")
    matrix = load_importance_csv(run_config["input"])
    matrix.plot_heatmap(run_config["out"], title=run_config["title"])


def cmd_synth(run_config):
    from QAHeadTool.Functions.synthetic import generate_question_types, generate_synthetic

    task = run_config["task"]
    out = run_config["out"]
    if out is None:
        out = "synthetic_" + task + "_" + run_config["split"] + ".jsonl"
    if task == "Q":
        dataset = generate_question_types(
            run_config["n"],
            run_config["seed"],
            run_config["sequence_length"],
            run_config["split"],
        )
    else:
        spec = SyntheticSpec(
            n_samples=run_config["n"],
            seed=run_config["seed"],
            context_len=run_config["context_len"],
            answerable_fraction=run_config["answerable_fraction"],
            answer_len=run_config["answer_len"],
            n_distractors=run_config["n_distractors"],
            max_seq_len=run_config["sequence_length"],
        )
        dataset = generate_synthetic(spec, task, run_config["split"])
    dataset.save_jsonl(out)
    write_json(dataset.get_task_counts())


def cmd_specialize(run_config):
    from QAHeadTool.Functions.Headlens.specialization import run_specialization

    reports = list()
    for seed in run_config["seeds"]:
        hp = run_config.get_hyperparameters()
        hp.seed = seed
        out_dir = None
        if run_config["out"] is not None:
            out_dir = join(run_config["out"], "seed_" + str(seed))
        reports.append(
            run_specialization(
                seed,
                n_samples=run_config["n"],
                hp=hp,
                n_jobs=run_config["jobs"],
                out_dir=out_dir,
            )
        )
    n_specialized = sum(report["is_specialized"] for report in reports)
    logger.info("%d of %d seeds specialized", n_specialized, len(reports))
    out_path = None
    if run_config["out"] is not None:
        out_path = join(run_config["out"], "specialization.json")
    write_json(reports, out_path)


def cmd_discriminate(run_config):
    from QAHeadTool.Functions.Load.resolve_task_data import resolve_task_data
    from QAHeadTool.Functions.Numerics.rng import make_rng
    from QAHeadTool.Functions.synthetic import generate_question_types
    from QAHeadTool.Functions.Training.discriminator import train_discriminator

    hp = run_config.get_hyperparameters()
    if run_config["data_dir"] is None:
        dataset = generate_question_types(run_config["n"], hp.seed, hp.max_seq_len)
    else:
        dataset = resolve_task_data(
            run_config["data_dir"], "all", "train", hp.max_seq_len, hp.seed
        ).to_question_types(hp.max_seq_len)
    split_rng = make_rng(hp.seed, stream=(QUESTION_SPLIT_STREAM,))
    train_data, dev_data = dataset.train_dev_split(0.2, split_rng)
    report, _, accuracy = train_discriminator(
        train_data, dev_data, hp, out_dir=run_config["out"]
    )
    result = report.as_dict()
    result["held_out_accuracy"] = accuracy
    write_json(result)


COMMANDS = {
    "train": cmd_train,
    "eval": cmd_eval,
    "rank-heads": cmd_rank_heads,
    "compare": cmd_compare,
    "plot": cmd_plot,
    "synth": cmd_synth,
    "specialize": cmd_specialize,
    "discriminate": cmd_discriminate,
}


def main(argv=None):
    """Run one command, returns the exit code"""
    args = vars(get_parser().parse_args(argv))
    verbose = args.pop("verbose")
    config_file = args.pop("config")
    command = args.pop("command")
    matplotlib.use("Agg")
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        run_config = RunConfig.resolve(
            command, args, COMMAND_DEFAULTS[command], config_file
        )
        logger.info("qaheadtool %s, resolved %s", __version__, run_config)
        COMMANDS[command](run_config)
    except NumericError as error:
        logger.error("numeric failure: %s", error)
        return 3
    except INPUT_ERRORS as error:
        logger.error("%s: %s", type(error).__name__, error)
        return 2
    return 0

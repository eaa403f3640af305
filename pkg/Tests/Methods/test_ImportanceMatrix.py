from os.path import join

import matplotlib
import numpy as np
import pytest

from QAHeadTool.Classes.ImportanceMatrix import ImportanceMatrix
from QAHeadTool.Classes.LayerSummary import LayerSummary
from QAHeadTool.Functions import ParseError, UsageError
from QAHeadTool.Functions.Load.load_importance_csv import load_importance_csv
from QAHeadTool.Functions.Plot import COLORMAP
from QAHeadTool.Functions.Plot.plot_heatmap import get_cell_colors
from QAHeadTool.Methods.ImportanceMatrix.save_csv import CSV_HEADER
from Tests.conftest import DATA_DIR

MATRIX_A = [[-3.0, 0.0], [1.0, -1.0]]
MATRIX_B = [[2.0, -4.0], [0.0, -1.0]]


@pytest.mark.METHODS
def test_top_heads():
    deltas = np.zeros((4, 3))
    deltas[3, 1] = -7.5
    deltas[0, 2] = 1.0
    matrix = ImportanceMatrix(deltas=deltas, baseline=60.0, metric="f1")
    heads = matrix.top_heads()
    assert heads[0] == (3, 1, -7.5)
    assert heads[-1] == (0, 2, 1.0)
    # Ties are broken by (layer, head)
    assert [entry[:2] for entry in heads[1:4]] == [(0, 0), (0, 1), (1, 0)]
    assert matrix.top_heads(2) == heads[:2]


@pytest.mark.METHODS
def test_masked_defaults_to_baseline_plus_delta():
    matrix = ImportanceMatrix(deltas=MATRIX_A, baseline=50.0)
    assert np.array_equal(matrix.masked, np.array(MATRIX_A) + 50.0)
    assert matrix.shape == (2, 2)


@pytest.mark.METHODS
def test_layer_summary():
    matrix = ImportanceMatrix(deltas=[[-4.0, -1.0, 0.0, 2.0], [3.0, 3.0, 3.0, 3.0]])
    summary = matrix.layer_summary()
    assert isinstance(summary, LayerSummary)
    assert summary.get_statistic("median")[0] == pytest.approx(-0.5)
    assert summary.get_statistic("min")[0] == -4.0
    assert summary.get_statistic("max")[0] == 2.0
    assert summary.get_statistic("q25")[0] == pytest.approx(-1.75)
    assert summary.get_statistic("q75")[0] == pytest.approx(0.5)
    assert np.all(summary.stats[1] == 3.0)


@pytest.mark.METHODS
def test_layer_summary_single_head():
    summary = ImportanceMatrix(deltas=[[-2.0], [5.0]]).layer_summary()
    assert np.array_equal(summary.stats[:, 0], summary.stats[:, 4])
    assert np.array_equal(summary.get_statistic("median"), [-2.0, 5.0])


@pytest.mark.METHODS
def test_layer_summary_dict(tmp_path):
    summary = ImportanceMatrix(deltas=MATRIX_A, metric="f1").layer_summary()
    data = summary.as_dict()
    assert data["metric"] == "f1"
    assert data["layers"][0]["min"] == -3.0
    assert LayerSummary(init_dict=data) == summary


@pytest.mark.METHODS
def test_compare_tasks():
    matrix_a = ImportanceMatrix(deltas=MATRIX_A, metric="f1")
    matrix_b = ImportanceMatrix(deltas=MATRIX_B, metric="accuracy")
    report = matrix_a.compare_tasks(matrix_b)
    assert report["top1_a"] == [0, 0]
    assert report["top1_b"] == [0, 1]
    assert report["distinct_top1"]
    assert report["cross_rank"] == 4
    assert report["cross_delta"] == 2.0
    assert report["top10pct_overlap"] == 0.0
    assert report["spearman"] == pytest.approx(-0.4)


@pytest.mark.METHODS
def test_compare_tasks_self_and_negation():
    deltas = np.arange(12, dtype=float).reshape(3, 4) - 5.0
    matrix = ImportanceMatrix(deltas=deltas)
    report = matrix.compare_tasks(matrix)
    assert report["spearman"] == pytest.approx(1.0)
    assert report["top10pct_overlap"] == 1.0
    assert report["cross_rank"] == 1
    assert not report["distinct_top1"]
    report = matrix.compare_tasks(ImportanceMatrix(deltas=-deltas))
    assert report["spearman"] == pytest.approx(-1.0)


@pytest.mark.METHODS
def test_compare_tasks_constant_and_shape():
    matrix = ImportanceMatrix(deltas=MATRIX_A)
    assert matrix.compare_tasks(ImportanceMatrix(deltas=np.zeros((2, 2))))["spearman"] is None
    with pytest.raises(UsageError):
        matrix.compare_tasks(ImportanceMatrix(deltas=np.zeros((2, 3))))


@pytest.mark.METHODS
def test_compare_single_and_multi():
    multi = ImportanceMatrix(deltas=MATRIX_A, metric="accuracy")
    single = ImportanceMatrix(deltas=MATRIX_B, metric="accuracy")
    report = multi.compare_single_and_multi(single)
    assert report["multi_top"] == [0, 0]
    assert report["multi_top_rank_in_single"] == 4
    assert report["multi_worst"] == [1, 0]
    assert report["multi_worst_rank_in_single"] == 3
    assert report["n_heads"] == 4
    with pytest.raises(UsageError):
        multi.compare_single_and_multi(ImportanceMatrix(deltas=MATRIX_B, metric="f1"))


@pytest.mark.METHODS
def test_csv_reload(tmp_path):
    matrix = ImportanceMatrix(
        deltas=[[-1.0 / 3.0, 0.0], [2.5, -0.0625]], baseline=71.25, metric="f1"
    )
    file_path = matrix.save_csv(join(str(tmp_path), "out", "squad_dev.csv"))
    with open(file_path) as csv_file:
        lines = csv_file.read().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 5
    loaded = load_importance_csv(file_path, checkpoint_id="ckpt")
    assert np.array_equal(loaded.deltas, matrix.deltas)
    assert np.array_equal(loaded.masked, matrix.masked)
    assert loaded.baseline == 71.25
    assert loaded.metric == "f1"
    assert loaded.dataset_id == "squad_dev"
    assert loaded.checkpoint_id == "ckpt"


@pytest.mark.METHODS
def test_csv_malformed():
    with pytest.raises(ParseError, match="row 3"):
        load_importance_csv(join(DATA_DIR, "importance_malformed.csv"))


@pytest.mark.METHODS
def test_csv_missing_head(tmp_path):
    file_path = join(str(tmp_path), "partial.csv")
    with open(file_path, "w") as csv_file:
        csv_file.write(",".join(CSV_HEADER) + "\n0,0,f1,50,48,-2\n1,1,f1,50,49,-1\n")
    with pytest.raises(ParseError, match="2 x 2"):
        load_importance_csv(file_path)


@pytest.mark.PLOT
def test_cell_colors():
    deltas = np.array([[-6.0, 0.0, 1.0], [3.0, -2.0, 0.5]])
    colors = get_cell_colors(deltas)
    colormap = matplotlib.colormaps[COLORMAP]
    assert np.allclose(colors[0, 0], colormap(0.0))
    assert np.allclose(colors[0, 1], colormap(0.5))
    # The ramp is symmetric: +3 sits halfway between the middle and the top
    assert np.allclose(colors[1, 0], colormap(0.75))
    flat = np.zeros((2, 3))
    colors = get_cell_colors(flat)
    assert np.all(colors == colors[0, 0])


@pytest.mark.PLOT
def test_plot_heatmap(tmp_path):
    matrix = ImportanceMatrix(deltas=MATRIX_A, metric="f1", dataset_id="squad-dev")
    first = matrix.plot_heatmap(join(str(tmp_path), "first.svg"))
    second = matrix.plot_heatmap(join(str(tmp_path), "second.svg"))
    with open(first, "rb") as svg_file:
        content = svg_file.read()
    assert b"<svg" in content
    with open(second, "rb") as svg_file:
        assert svg_file.read() == content

"""Head specialization of an all-purpose model trained on synthetic tasks"""
import pytest

from QAHeadTool.Functions.Headlens.specialization import (
    MAX_OTHER_COST,
    MIN_OWN_COST,
    run_specialization,
)

SEEDS = [0, 1, 2]


@pytest.mark.long
@pytest.mark.validation
def test_specialization(tmp_path):
    reports = [
        run_specialization(seed, n_jobs=2, out_dir=str(tmp_path / str(seed))) for seed in SEEDS
    ]
    for report in reports:
        assert report["final_loss"] < 1.0
        assert report["baseline_f1_a"] > 50.0
        assert report["baseline_accuracy_b"] > 50.0
        assert report["is_specialized"] == (
            report["comparison"]["distinct_top1"]
            and report["top_a_cost_on_a"] >= MIN_OWN_COST
            and report["top_a_cost_on_b"] < MAX_OTHER_COST
        )
    assert sum(report["is_specialized"] for report in reports) >= 2
    assert (tmp_path / "0" / "importance_A.csv").is_file()
    assert (tmp_path / "0" / "importance_B.svg").is_file()

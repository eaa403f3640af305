import csv
from os.path import basename, isfile, splitext

from numpy import full, isnan, nan

from QAHeadTool.Classes.ImportanceMatrix import ImportanceMatrix
from QAHeadTool.Functions import ParseError
from QAHeadTool.Functions.Load.load_json import LoadMissingFileError
from QAHeadTool.Methods.ImportanceMatrix.save_csv import CSV_HEADER


def load_importance_csv(file_path, checkpoint_id=""):
    """Read an ImportanceMatrix written by ImportanceMatrix.save_csv

    Parameters
    ----------
    file_path : str
        importance CSV (header layer,head,metric,baseline,masked,delta)
    checkpoint_id : str
        identifier of the ranked checkpoint (not stored in the CSV)

    Returns
    -------
    matrix : ImportanceMatrix
        the dataset id is the file name without extension

    Raises
    ------
    ParseError
        wrong header, malformed row (the row number is given), duplicated or
        missing head, several metrics or baselines
    """
    if not isfile(file_path):
        raise LoadMissingFileError(str(file_path) + " doesn't exist")
    name = basename(file_path)
    with open(file_path, "r", newline="") as csv_file:
        rows = list(csv.reader(csv_file))
    if len(rows) == 0 or rows[0] != CSV_HEADER:
        raise ParseError(name + " row 1: header " + ",".join(CSV_HEADER) + " expected")
    entries = dict()
    metrics, baselines = set(), set()
    for row_number, row in enumerate(rows[1:], start=2):
        where = name + " row " + str(row_number)
        if len(row) != len(CSV_HEADER):
            raise ParseError(where + ": " + str(len(CSV_HEADER)) + " fields expected")
        try:
            layer, head = int(row[0]), int(row[1])
            baseline, masked, delta = float(row[3]), float(row[4]), float(row[5])
        except ValueError as error:
            raise ParseError(where + ": " + str(error))
        if layer < 0 or head < 0 or (layer, head) in entries:
            raise ParseError(where + ": invalid or repeated head " + str((layer, head)))
        if row[2] not in ["accuracy", "f1"]:
            raise ParseError(where + ": unknown metric " + repr(row[2]))
        metrics.add(row[2])
        baselines.add(baseline)
        entries[(layer, head)] = (masked, delta)
    if len(entries) == 0:
        raise ParseError(name + ": no data row")
    if len(metrics) != 1 or len(baselines) != 1:
        raise ParseError(name + ": rows disagree on the metric or the baseline")
    n_layers = max(layer for layer, _ in entries) + 1
    n_heads = max(head for _, head in entries) + 1
    masked, deltas = full((n_layers, n_heads), nan), full((n_layers, n_heads), nan)
    for (layer, head), (masked_value, delta) in entries.items():
        masked[layer, head], deltas[layer, head] = masked_value, delta
    if isnan(deltas).any():
        raise ParseError(
            name + ": " + str(n_layers) + " x " + str(n_heads) + " heads expected"
        )
    return ImportanceMatrix(
        deltas=deltas,
        masked=masked,
        baseline=baselines.pop(),
        metric=metrics.pop(),
        checkpoint_id=checkpoint_id,
        dataset_id=splitext(name)[0],
    )

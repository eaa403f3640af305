import csv
from os import makedirs
from os.path import dirname

CSV_HEADER = ["layer", "head", "metric", "baseline", "masked", "delta"]


def format_value(value):
    """17 significant digits, enough to read a float64 back bit-exact"""
    return "%.17g" % value


def save_csv(self, file_path):
    """Write the matrix as one CSV row per head, in (layer, head) order
    Parameters
    ----------
    self: ImportanceMatrix
        an ImportanceMatrix object
    file_path: str
        path of the CSV file
    Returns
    -------
    file_path: str
        path of the CSV file
    """
    if dirname(file_path) != "":
        makedirs(dirname(file_path), exist_ok=True)
    n_layers, n_heads = self.shape
    with open(file_path, "w", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for layer in range(n_layers):
            for head in range(n_heads):
                writer.writerow(
                    [
                        layer,
                        head,
                        self.metric,
                        format_value(self.baseline),
                        format_value(self.masked[layer, head]),
                        format_value(self.deltas[layer, head]),
                    ]
                )
    return file_path

from QAHeadTool.Functions.Plot.plot_heatmap import plot_heatmap as plot_matrix

LABELS = {"accuracy": "Accuracy", "f1": "F1"}


def plot_heatmap(self, save_path, title=None):
    """Render the deltas as a layer x head SVG heatmap
    Parameters
    ----------
    self: ImportanceMatrix
        an ImportanceMatrix object
    save_path: str
        path of the SVG file
    title: str
        figure title (default built from the metric and dataset)
    Returns
    -------
    save_path: str
        path of the SVG file
    """
    if title is None:
        title = "Change in dev " + LABELS[self.metric]
        if self.dataset_id != "":
            title += " (" + self.dataset_id + ")"
    return plot_matrix(
        self.deltas,
        save_path,
        title=title,
        zlabel=LABELS[self.metric] + " points",
    )

def filter_task(self, task):
    """Returns the samples of a single task (boolean, extractive or question_type)"""
    return type(self)(
        samples=[sample for sample in self.samples if sample.task == task],
        split=self.split,
        provenance=self.provenance,
        n_truncated=self.n_truncated if task == "extractive" else 0,
        name=self.name + ("-" + task if self.name else ""),
    )

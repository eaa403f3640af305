from QAHeadTool.Functions.Model import HEAD_PREFIX


def get_head_names(self):
    """Returns the names of the task head tensors (f_a, f_s, f_e layers)"""
    return [name for name in self.tensors if name.startswith(HEAD_PREFIX)]

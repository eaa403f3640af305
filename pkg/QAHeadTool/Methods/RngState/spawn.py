def spawn(self, n_children):
    """Returns independent child streams, child i extending the stream with i
    Parameters
    ----------
    self: RngState
        a RngState object
    n_children: int
        number of children
    Returns
    -------
    children: list
        list of RngState
    """
    return [
        type(self)(seed=self.seed, stream=self.stream + [index], algorithm=self.algorithm)
        for index in range(n_children)
    ]

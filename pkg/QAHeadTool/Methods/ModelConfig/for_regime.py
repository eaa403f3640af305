from QAHeadTool.Functions import regime_categories


def for_regime(self, regime):
    """Returns a copy of the geometry with the output layers of another regime
    Parameters
    ----------
    self: ModelConfig
        a ModelConfig object
    regime: str
        boolq, squad, all or question_type
    Returns
    -------
    config: ModelConfig
        same backbone, answer space of regime
    """
    config = self.copy(
        regime=regime,
        answer_categories=len(regime_categories[regime]),
        span_heads_enabled=regime in ["squad", "all"],
    )
    config.check()
    return config

from QAHeadTool.Functions import RegimeError, regime_categories
from QAHeadTool.Classes._check import CheckError


def check(self):
    """Check the consistency of the geometry and of the answer space
    Parameters
    ----------
    self: ModelConfig
        a ModelConfig object
    Raises
    ------
    CheckError
        hidden_dim is not divisible by n_heads
    RegimeError
        answer_categories / span_heads_enabled do not match the regime
    """
    if self.hidden_dim % self.n_heads != 0:
        raise CheckError(
            "hidden_dim ("
            + str(self.hidden_dim)
            + ") must be divisible by n_heads ("
            + str(self.n_heads)
            + ")"
        )
    n_categories = len(regime_categories[self.regime])
    has_span = self.regime in ["squad", "all"]
    if self.answer_categories != n_categories or self.span_heads_enabled != has_span:
        raise RegimeError(
            "Regime "
            + self.regime
            + " needs "
            + str(n_categories)
            + " answer categories and span heads "
            + ("enabled" if has_span else "disabled")
        )

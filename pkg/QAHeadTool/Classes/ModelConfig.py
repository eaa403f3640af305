# -*- coding: utf-8 -*-
"""Architecture hyperparameters of the transformer encoder and its task heads

Method code available in QAHeadTool/Methods/ModelConfig
"""

from os import linesep

from ._check import check_var, check_choice, raise_
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.ModelConfig.count_heads import count_heads
except ImportError as error:
    count_heads = error

try:
    from ..Methods.ModelConfig.check import check
except ImportError as error:
    check = error

try:
    from ..Methods.ModelConfig.for_regime import for_regime
except ImportError as error:
    for_regime = error


class ModelConfig(FrozenClass):
    """Geometry of the encoder (L layers of H heads) and of its output layers"""

    VERSION = 1

    # cf Methods.ModelConfig.count_heads
    if isinstance(count_heads, ImportError):
        count_heads = property(
            fget=lambda x: raise_(
                ImportError("Can't use ModelConfig method count_heads: " + str(count_heads))
            )
        )
    else:
        count_heads = count_heads
    # cf Methods.ModelConfig.check
    if isinstance(check, ImportError):
        check = property(
            fget=lambda x: raise_(
                ImportError("Can't use ModelConfig method check: " + str(check))
            )
        )
    else:
        check = check
    # cf Methods.ModelConfig.for_regime
    if isinstance(for_regime, ImportError):
        for_regime = property(
            fget=lambda x: raise_(
                ImportError("Can't use ModelConfig method for_regime: " + str(for_regime))
            )
        )
    else:
        for_regime = for_regime
    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(
        self,
        n_layers=2,
        hidden_dim=64,
        n_heads=4,
        ffn_dim=None,
        vocab_size=259,
        max_seq_len=96,
        dropout_rate=0.1,
        answer_categories=4,
        span_heads_enabled=True,
        regime="all",
        init_dict=None,
        init_str=None,
    ):
        """Constructor of the class. Can be use in three ways :
        - __init__ (arg1 = 1, arg3 = 5) every parameters have name and default values
        - __init__ (init_dict = d) d must be a dictionary with property names as keys
        - __init__ (init_str = s) s must be a string
        s is the file path to load"""

        if init_str is not None:  # Load from a file
            init_dict = load_init_dict(init_str)[1]
        if init_dict is not None:  # Initialisation by dict
            assert type(init_dict) is dict
            n_layers = init_dict.get("n_layers", n_layers)
            hidden_dim = init_dict.get("hidden_dim", hidden_dim)
            n_heads = init_dict.get("n_heads", n_heads)
            ffn_dim = init_dict.get("ffn_dim", ffn_dim)
            vocab_size = init_dict.get("vocab_size", vocab_size)
            max_seq_len = init_dict.get("max_seq_len", max_seq_len)
            dropout_rate = init_dict.get("dropout_rate", dropout_rate)
            answer_categories = init_dict.get("answer_categories", answer_categories)
            span_heads_enabled = init_dict.get("span_heads_enabled", span_heads_enabled)
            regime = init_dict.get("regime", regime)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.n_layers = n_layers
        self.hidden_dim = hidden_dim
        self.n_heads = n_heads
        self.ffn_dim = 4 * hidden_dim if ffn_dim is None else ffn_dim
        self.vocab_size = vocab_size
        self.max_seq_len = max_seq_len
        self.dropout_rate = dropout_rate
        self.answer_categories = answer_categories
        self.span_heads_enabled = span_heads_enabled
        self.regime = regime

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""

        ModelConfig_str = ""
        for key, value in self.as_dict().items():
            if key != "__class__":
                ModelConfig_str += key + " = " + str(value) + linesep
        return ModelConfig_str

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""

        ModelConfig_dict = dict()
        ModelConfig_dict["n_layers"] = self.n_layers
        ModelConfig_dict["hidden_dim"] = self.hidden_dim
        ModelConfig_dict["n_heads"] = self.n_heads
        ModelConfig_dict["ffn_dim"] = self.ffn_dim
        ModelConfig_dict["vocab_size"] = self.vocab_size
        ModelConfig_dict["max_seq_len"] = self.max_seq_len
        ModelConfig_dict["dropout_rate"] = self.dropout_rate
        ModelConfig_dict["answer_categories"] = self.answer_categories
        ModelConfig_dict["span_heads_enabled"] = self.span_heads_enabled
        ModelConfig_dict["regime"] = self.regime
        # The class name is added to the dict for deserialisation purpose
        ModelConfig_dict["__class__"] = "ModelConfig"
        return ModelConfig_dict

    def _get_n_layers(self):
        """getter of n_layers"""
        return self._n_layers

    def _set_n_layers(self, value):
        """setter of n_layers"""
        check_var("n_layers", value, "int", Vmin=1)
        self._n_layers = int(value)

    n_layers = property(
        fget=_get_n_layers,
        fset=_set_n_layers,
        doc=u"""Number of encoder layers L

        :Type: int
        :min: 1
        """,
    )

    def _get_hidden_dim(self):
        """getter of hidden_dim"""
        return self._hidden_dim

    def _set_hidden_dim(self, value):
        """setter of hidden_dim"""
        check_var("hidden_dim", value, "int", Vmin=1)
        self._hidden_dim = int(value)

    hidden_dim = property(
        fget=_get_hidden_dim,
        fset=_set_hidden_dim,
        doc=u"""Width d of the token representations

        :Type: int
        :min: 1
        """,
    )

    def _get_n_heads(self):
        """getter of n_heads"""
        return self._n_heads

    def _set_n_heads(self, value):
        """setter of n_heads"""
        check_var("n_heads", value, "int", Vmin=1)
        self._n_heads = int(value)

    n_heads = property(
        fget=_get_n_heads,
        fset=_set_n_heads,
        doc=u"""Number of attention heads H per layer

        :Type: int
        :min: 1
        """,
    )

    def _get_head_dim(self):
        """getter of head_dim"""
        return self.hidden_dim // self.n_heads

    head_dim = property(
        fget=_get_head_dim,
        doc=u"""Width d/H of a single head

        :Type: int
        """,
    )

    def _get_ffn_dim(self):
        """getter of ffn_dim"""
        return self._ffn_dim

    def _set_ffn_dim(self, value):
        """setter of ffn_dim"""
        check_var("ffn_dim", value, "int", Vmin=1)
        self._ffn_dim = int(value)

    ffn_dim = property(
        fget=_get_ffn_dim,
        fset=_set_ffn_dim,
        doc=u"""Inner width of the feed-forward blocks (4d by default)

        :Type: int
        """,
    )

    def _get_vocab_size(self):
        """getter of vocab_size"""
        return self._vocab_size

    def _set_vocab_size(self, value):
        """setter of vocab_size"""
        check_var("vocab_size", value, "int", Vmin=1)
        self._vocab_size = int(value)

    vocab_size = property(
        fget=_get_vocab_size,
        fset=_set_vocab_size,
        doc=u"""Number of token ids (259 for the byte vocabulary)

        :Type: int
        """,
    )

    def _get_max_seq_len(self):
        """getter of max_seq_len"""
        return self._max_seq_len

    def _set_max_seq_len(self, value):
        """setter of max_seq_len"""
        check_var("max_seq_len", value, "int", Vmin=3)
        self._max_seq_len = int(value)

    max_seq_len = property(
        fget=_get_max_seq_len,
        fset=_set_max_seq_len,
        doc=u"""Number of learned positions (maximum encoded length)

        :Type: int
        """,
    )

    def _get_dropout_rate(self):
        """getter of dropout_rate"""
        return self._dropout_rate

    def _set_dropout_rate(self, value):
        """setter of dropout_rate"""
        check_var("dropout_rate", value, "float", Vmin=0, Vmax=0.99)
        self._dropout_rate = float(value)

    dropout_rate = property(
        fget=_get_dropout_rate,
        fset=_set_dropout_rate,
        doc=u"""Dropout probability used in train mode

        :Type: float
        """,
    )

    def _get_answer_categories(self):
        """getter of answer_categories"""
        return self._answer_categories

    def _set_answer_categories(self, value):
        """setter of answer_categories"""
        check_var("answer_categories", value, "int")
        check_choice("answer_categories", value, [2, 4])
        self._answer_categories = int(value)

    answer_categories = property(
        fget=_get_answer_categories,
        fset=_set_answer_categories,
        doc=u"""Size of the f_a distribution (2 or 4)

        :Type: int
        """,
    )

    def _get_span_heads_enabled(self):
        """getter of span_heads_enabled"""
        return self._span_heads_enabled

    def _set_span_heads_enabled(self, value):
        """setter of span_heads_enabled"""
        check_var("span_heads_enabled", value, "bool")
        self._span_heads_enabled = bool(value)

    span_heads_enabled = property(
        fget=_get_span_heads_enabled,
        fset=_set_span_heads_enabled,
        doc=u"""True to compute the span start/end distributions f_s and f_e

        :Type: bool
        """,
    )

    def _get_regime(self):
        """getter of regime"""
        return self._regime

    def _set_regime(self, value):
        """setter of regime"""
        check_var("regime", value, "str")
        check_choice("regime", value, ["boolq", "squad", "all", "question_type"])
        self._regime = value

    regime = property(
        fget=_get_regime,
        fset=_set_regime,
        doc=u"""Answer space of the model: boolq, squad, all or question_type

        :Type: str
        """,
    )

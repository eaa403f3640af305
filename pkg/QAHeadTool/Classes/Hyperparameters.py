# -*- coding: utf-8 -*-
"""Fine-tuning hyperparameters (optimizer, schedule, batches, regularization)

Method code available in QAHeadTool/Methods/Hyperparameters
"""

from os import linesep

from ._check import check_var, raise_
from ..Functions.save import save
from ..Functions.copy import copy
from ..Functions.load import load_init_dict
from ._frozen import FrozenClass

# Import all class method
# Try/catch to remove unnecessary dependencies in unused method
try:
    from ..Methods.Hyperparameters.lr_at import lr_at
except ImportError as error:
    lr_at = error

try:
    from ..Methods.Hyperparameters.get_total_steps import get_total_steps
except ImportError as error:
    get_total_steps = error


class Hyperparameters(FrozenClass):
    """Optimizer and schedule settings; json files name max_seq_len
    sequence_length"""

    VERSION = 1

    # cf Methods.Hyperparameters.lr_at
    if isinstance(lr_at, ImportError):
        lr_at = property(
            fget=lambda x: raise_(
                ImportError("Can't use Hyperparameters method lr_at: " + str(lr_at))
            )
        )
    else:
        lr_at = lr_at
    # cf Methods.Hyperparameters.get_total_steps
    if isinstance(get_total_steps, ImportError):
        get_total_steps = property(
            fget=lambda x: raise_(
                ImportError(
                    "Can't use Hyperparameters method get_total_steps: "
                    + str(get_total_steps)
                )
            )
        )
    else:
        get_total_steps = get_total_steps
    # save and copy methods are available in all object
    save = save
    copy = copy

    def __init__(
        self,
        epochs=5,
        warmup_ratio=0.06,
        batch_size=32,
        learning_rate=3e-4,
        adam_beta1=0.9,
        adam_beta2=0.999,
        adam_epsilon=1e-8,
        max_grad_norm=1.0,
        dropout=0.1,
        max_seq_len=96,
        seed=0,
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
            epochs = init_dict.get("epochs", epochs)
            warmup_ratio = init_dict.get("warmup_ratio", warmup_ratio)
            batch_size = init_dict.get("batch_size", batch_size)
            learning_rate = init_dict.get("learning_rate", learning_rate)
            adam_beta1 = init_dict.get("adam_beta1", adam_beta1)
            adam_beta2 = init_dict.get("adam_beta2", adam_beta2)
            adam_epsilon = init_dict.get("adam_epsilon", adam_epsilon)
            max_grad_norm = init_dict.get("max_grad_norm", max_grad_norm)
            dropout = init_dict.get("dropout", dropout)
            max_seq_len = init_dict.get(
                "sequence_length", init_dict.get("max_seq_len", max_seq_len)
            )
            seed = init_dict.get("seed", seed)
        # Set the properties (value check and convertion are done in setter)
        self.parent = None
        self.epochs = epochs
        self.warmup_ratio = warmup_ratio
        self.batch_size = batch_size
        self.learning_rate = learning_rate
        self.adam_beta1 = adam_beta1
        self.adam_beta2 = adam_beta2
        self.adam_epsilon = adam_epsilon
        self.max_grad_norm = max_grad_norm
        self.dropout = dropout
        self.max_seq_len = max_seq_len
        self.seed = seed

        # The class is frozen, for now it's impossible to add new properties
        self._freeze()

    def __str__(self):
        """Convert this object in a readeable string (for print)"""

        Hyperparameters_str = ""
        for key, value in self.as_dict().items():
            if key != "__class__":
                Hyperparameters_str += key + " = " + str(value) + linesep
        return Hyperparameters_str

    def as_dict(self, **kwargs):
        """Convert this object in a json serializable dict (can be use in __init__)"""

        Hyperparameters_dict = dict()
        Hyperparameters_dict["epochs"] = self.epochs
        Hyperparameters_dict["warmup_ratio"] = self.warmup_ratio
        Hyperparameters_dict["batch_size"] = self.batch_size
        Hyperparameters_dict["learning_rate"] = self.learning_rate
        Hyperparameters_dict["adam_beta1"] = self.adam_beta1
        Hyperparameters_dict["adam_beta2"] = self.adam_beta2
        Hyperparameters_dict["adam_epsilon"] = self.adam_epsilon
        Hyperparameters_dict["max_grad_norm"] = self.max_grad_norm
        Hyperparameters_dict["dropout"] = self.dropout
        Hyperparameters_dict["sequence_length"] = self.max_seq_len
        Hyperparameters_dict["seed"] = self.seed
        # The class name is added to the dict for deserialisation purpose
        Hyperparameters_dict["__class__"] = "Hyperparameters"
        return Hyperparameters_dict

    def _get_epochs(self):
        """getter of epochs"""
        return self._epochs

    def _set_epochs(self, value):
        """setter of epochs"""
        check_var("epochs", value, "int", Vmin=1)
        self._epochs = int(value)

    epochs = property(
        fget=_get_epochs,
        fset=_set_epochs,
        doc=u"""Number of passes over the training set

        :Type: int
        :min: 1
        """,
    )

    def _get_warmup_ratio(self):
        """getter of warmup_ratio"""
        return self._warmup_ratio

    def _set_warmup_ratio(self, value):
        """setter of warmup_ratio"""
        check_var("warmup_ratio", value, "float", Vmin=0, Vmax=0.999999)
        self._warmup_ratio = float(value)

    warmup_ratio = property(
        fget=_get_warmup_ratio,
        fset=_set_warmup_ratio,
        doc=u"""Fraction of the optimizer steps with a linearly increasing lr

        :Type: float
        :min: 0
        :max: <1
        """,
    )

    def _get_batch_size(self):
        """getter of batch_size"""
        return self._batch_size

    def _set_batch_size(self, value):
        """setter of batch_size"""
        check_var("batch_size", value, "int", Vmin=1)
        self._batch_size = int(value)

    batch_size = property(
        fget=_get_batch_size,
        fset=_set_batch_size,
        doc=u"""Number of samples per optimizer step (last batch may be smaller)

        :Type: int
        """,
    )

    def _get_learning_rate(self):
        """getter of learning_rate"""
        return self._learning_rate

    def _set_learning_rate(self, value):
        """setter of learning_rate"""
        check_var("learning_rate", value, "float", Vmin=0)
        self._learning_rate = float(value)

    learning_rate = property(
        fget=_get_learning_rate,
        fset=_set_learning_rate,
        doc=u"""Peak learning rate reached at the end of the warmup

        :Type: float
        """,
    )

    def _get_adam_beta1(self):
        """getter of adam_beta1"""
        return self._adam_beta1

    def _set_adam_beta1(self, value):
        """setter of adam_beta1"""
        check_var("adam_beta1", value, "float", Vmin=0, Vmax=0.999999)
        self._adam_beta1 = float(value)

    adam_beta1 = property(
        fget=_get_adam_beta1,
        fset=_set_adam_beta1,
        doc=u"""Decay of the first moment estimate

        :Type: float
        """,
    )

    def _get_adam_beta2(self):
        """getter of adam_beta2"""
        return self._adam_beta2

    def _set_adam_beta2(self, value):
        """setter of adam_beta2"""
        check_var("adam_beta2", value, "float", Vmin=0, Vmax=0.999999)
        self._adam_beta2 = float(value)

    adam_beta2 = property(
        fget=_get_adam_beta2,
        fset=_set_adam_beta2,
        doc=u"""Decay of the second moment estimate

        :Type: float
        """,
    )

    def _get_adam_epsilon(self):
        """getter of adam_epsilon"""
        return self._adam_epsilon

    def _set_adam_epsilon(self, value):
        """setter of adam_epsilon"""
        check_var("adam_epsilon", value, "float", Vmin=0)
        self._adam_epsilon = float(value)

    adam_epsilon = property(
        fget=_get_adam_epsilon,
        fset=_set_adam_epsilon,
        doc=u"""Denominator offset of the Adam update

        :Type: float
        """,
    )

    def _get_max_grad_norm(self):
        """getter of max_grad_norm"""
        return self._max_grad_norm

    def _set_max_grad_norm(self, value):
        """setter of max_grad_norm"""
        check_var("max_grad_norm", value, "float", Vmin=0)
        self._max_grad_norm = float(value)

    max_grad_norm = property(
        fget=_get_max_grad_norm,
        fset=_set_max_grad_norm,
        doc=u"""Global L2 norm above which gradients are rescaled

        :Type: float
        """,
    )

    def _get_dropout(self):
        """getter of dropout"""
        return self._dropout

    def _set_dropout(self, value):
        """setter of dropout"""
        check_var("dropout", value, "float", Vmin=0, Vmax=0.99)
        self._dropout = float(value)

    dropout = property(
        fget=_get_dropout,
        fset=_set_dropout,
        doc=u"""Dropout probability in train mode

        :Type: float
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
        doc=u"""Encoding window in tokens (sequence_length in json files)

        :Type: int
        """,
    )

    def _get_seed(self):
        """getter of seed"""
        return self._seed

    def _set_seed(self, value):
        """setter of seed"""
        check_var("seed", value, "int", Vmin=0)
        self._seed = int(value)

    seed = property(
        fget=_get_seed,
        fset=_set_seed,
        doc=u"""Seed of initialization, shuffling and dropout streams

        :Type: int
        """,
    )

# Hyperparameter presets (json names as in Hyperparameters.as_dict)
TOY_PRESET = {
    "epochs": 5,
    "warmup_ratio": 0.06,
    "batch_size": 32,
    "learning_rate": 3e-4,
    "adam_beta1": 0.9,
    "adam_beta2": 0.999,
    "adam_epsilon": 1e-8,
    "max_grad_norm": 1.0,
    "dropout": 0.1,
    "sequence_length": 96,
    "seed": 0,
}

# Fine-tuning values of the pre-trained base model, kept for reference runs
BASE_PRESETS = {
    "boolq": {
        "epochs": 5,
        "warmup_ratio": 0.0,
        "batch_size": 32,
        "learning_rate": 1e-5,
        "adam_beta1": 0.9,
        "adam_beta2": 0.999,
        "max_grad_norm": 1.0,
        "dropout": 0.1,
        "sequence_length": 256,
    },
    "squad": {
        "epochs": 3,
        "warmup_ratio": 0.06,
        "batch_size": 16,
        "learning_rate": 1.5e-5,
        "adam_beta1": 0.9,
        "adam_beta2": 0.999,
        "max_grad_norm": 1.0,
        "dropout": 0.1,
        "sequence_length": 384,
    },
    "all": {
        "epochs": 5,
        "warmup_ratio": 0.06,
        "batch_size": 16,
        "learning_rate": 1.5e-5,
        "adam_beta1": 0.9,
        "adam_beta2": 0.999,
        "max_grad_norm": 1.0,
        "dropout": 0.1,
        "sequence_length": 384,
    },
}
# The question type model uses the BoolQ values
BASE_PRESETS["question_type"] = dict(BASE_PRESETS["boolq"])

# Dev scores of the pre-trained base model (documentation only)
REFERENCE_SCORES = {
    "boolq": {"accuracy": 79.1},
    "squad": {"f1": 81.0},
    "all": {"accuracy": 76.0, "f1": 81.4},
    "boolq->squad": {"f1": 81.8},
    "squad->boolq": {"accuracy": 81.0},
}

# Independent rng streams derived from the training seed
INIT_STREAM = 0
SHUFFLE_STREAM = 1
DROPOUT_STREAM = 2
TRANSFER_STREAM = 3

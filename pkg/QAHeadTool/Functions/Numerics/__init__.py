from QAHeadTool.Functions.Numerics.matrix import (
    PROBA_FLOOR,
    cross_entropy,
    matmul,
    softmax_rows,
)
from QAHeadTool.Functions.Numerics.rng import make_rng
from QAHeadTool.Functions.Numerics.gradient_check import gradient_check

from QAHeadTool.Classes.ModelConfig import ModelConfig
from QAHeadTool.Classes.Hyperparameters import Hyperparameters
from QAHeadTool.Classes.HeadMask import HeadMask
from QAHeadTool.Classes.Dataset import Dataset
from QAHeadTool.Classes.EncodedSample import EncodedSample
from QAHeadTool.Classes.AnswerLabel import AnswerLabel
from QAHeadTool.Classes.SyntheticSpec import SyntheticSpec
from QAHeadTool.Classes.Metrics import Metrics
from QAHeadTool.Classes.ImportanceMatrix import ImportanceMatrix
from QAHeadTool.Classes.LayerSummary import LayerSummary
from QAHeadTool.Classes.RngState import RngState

__version__ = "1.0.0"

from QAHeadTool.Classes._check import CheckError
from QAHeadTool.Functions import task_categories
from QAHeadTool.Functions.tokenizer import CLS_ID, SEP_ID


def check(self, max_seq_len=None):
    """Check the structure of the sequence and the task/label pairing
    Parameters
    ----------
    self: EncodedSample
        an EncodedSample object
    max_seq_len: int
        encoding window (None to skip the length check)
    Raises
    ------
    CheckError
        the sample breaks one of its invariants
    """
    ids = self.token_ids
    n_tokens = ids.size
    if n_tokens == 0 or ids[0] != CLS_ID or int((ids == SEP_ID).sum()) != 1:
        raise CheckError(self.sample_id + ": expected [CLS] question [SEP] context")
    if max_seq_len is not None and n_tokens > max_seq_len:
        raise CheckError(
            self.sample_id + ": " + str(n_tokens) + " tokens > " + str(max_seq_len)
        )
    if self.task == "question_type":
        # Question only, the context region is empty
        is_region_ok = self.context_start == self.context_end == n_tokens
    else:
        is_region_ok = 0 < self.context_start < self.context_end <= n_tokens
    if not is_region_ok or ids[self.context_start - 1] != SEP_ID:
        raise CheckError(self.sample_id + ": inconsistent context region")
    if self.label is None or self.task == "":
        return
    if self.label.kind not in task_categories[self.task]:
        raise CheckError(
            self.sample_id
            + ": label "
            + self.label.kind
            + " is not legal for a "
            + self.task
            + " sample"
        )
    if self.label.is_span and not (
        self.context_start <= self.label.token_start <= self.label.token_end < self.context_end
    ):
        raise CheckError(self.sample_id + ": span outside the context region")

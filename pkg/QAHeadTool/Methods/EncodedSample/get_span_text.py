from QAHeadTool.Functions.tokenizer import decode_tokens


def get_span_text(self, token_start=None, token_end=None):
    """Returns the text of a token range (the gold span by default)
    Parameters
    ----------
    self: EncodedSample
        an EncodedSample object
    token_start: int
        first token of the range
    token_end: int
        last token of the range (inclusive)
    Returns
    -------
    text: str
        decoded bytes ("" when there is no span)
    """
    if token_start is None:
        if self.label is None or not self.label.is_span:
            return ""
        token_start, token_end = self.label.token_start, self.label.token_end
    return decode_tokens(self.token_ids[token_start : token_end + 1])

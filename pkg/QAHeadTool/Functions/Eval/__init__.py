# Longest decoded span in tokens
MAX_ANSWER_LEN = 30

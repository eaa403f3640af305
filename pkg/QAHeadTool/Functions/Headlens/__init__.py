# Dev metric scoring each task of a Dataset
task_metrics = {
    "boolean": "accuracy",
    "question_type": "accuracy",
    "extractive": "f1",
}

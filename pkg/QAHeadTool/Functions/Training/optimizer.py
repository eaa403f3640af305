import numpy as np


class Adam(object):
    """Adam with bias correction, updating Parameter.value in place"""

    def __init__(self, params, beta1=0.9, beta2=0.999, epsilon=1e-8):
        self.params = list(params)
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.n_steps = 0
        self.m = [np.zeros_like(param.value) for param in self.params]
        self.v = [np.zeros_like(param.value) for param in self.params]

    @classmethod
    def from_hyperparameters(cls, params, hp):
        return cls(params, hp.adam_beta1, hp.adam_beta2, hp.adam_epsilon)

    def step(self, lr):
        """Apply one update with learning rate lr using the current grads"""
        self.n_steps += 1
        correction1 = 1.0 - self.beta1**self.n_steps
        correction2 = 1.0 - self.beta2**self.n_steps
        for param, m, v in zip(self.params, self.m, self.v):
            m *= self.beta1
            m += (1.0 - self.beta1) * param.grad
            v *= self.beta2
            v += (1.0 - self.beta2) * param.grad**2
            param.value -= lr * (m / correction1) / (np.sqrt(v / correction2) + self.epsilon)

"""Compiled inner loop for the complex128 coefficient recurrence."""

import numpy as np
from numba import njit


@njit(cache=True)
def recurrence_c128(alpha, n):
    # alpha[j-1] holds alpha_j
    a = np.empty(n + 1, np.complex128)
    a[0] = 1.0
    for k in range(1, n + 1):
        acc = 0j
        for j in range(1, k + 1):
            acc += alpha[j - 1] * a[k - j]
        a[k] = -acc / k
    return a

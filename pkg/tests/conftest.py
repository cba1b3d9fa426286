"""Shared independent oracles for the test suite.

These deliberately avoid the library's evaluation strategies: power series
instead of recurrences, explicit matrix traces instead of closed-form sums,
matrix exponentials instead of assembled blocks, so each check pits two
independent routes against each other.
"""

import math

import mpmath as mp
import numpy as np
import pytest

mp.mp.dps = 40


def kummer_series(n: int, b: int, x) -> mp.mpf:
    """Phi(-n, b; x) by its terminating series.

    Working precision grows with the degree: the alternating sum cancels
    ~n/2 digits at moderate x, far beyond any fixed dps.
    """
    with mp.workdps(50 + n):
        s = mp.mpf(0)
        t = mp.mpf(1)
        for j in range(n + 1):
            s += t
            t = t * (-(n - j)) / ((b + j) * (j + 1)) * mp.mpf(x)
        return +s


def hyp2f0_series(m: int, n: int, x) -> mp.mpf:
    with mp.workdps(50 + min(m, n)):
        s = mp.mpf(0)
        for j in range(min(m, n) + 1):
            s += mp.rf(-m, j) * mp.rf(-n, j) / mp.factorial(j) * mp.mpf(x) ** j
        return +s


def laguerre_series(n: int, k: int, x) -> mp.mpf:
    with mp.workdps(50 + n):
        s = mp.mpf(0)
        for j in range(n + 1):
            s += (-1) ** j * mp.binomial(n + k, n - j) * mp.mpf(x) ** j / mp.factorial(j)
        return +s


def annihilator_ref(dim: int) -> np.ndarray:
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(n)
    return a


def group_matrix3(g) -> np.ndarray:
    """The defining 3x3 matrix of a group element."""
    w = g.r * np.exp(1j * g.psi)
    return np.array(
        [
            [np.exp(1j * g.phi), 0.0, w],
            [0.0, np.exp(-1j * g.phi), np.conj(w)],
            [0.0, 0.0, 1.0],
        ]
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)

"""Stable scalar special functions used throughout the package.

Everything here is polynomial or integer-order: the Kummer function
Phi(-n, b; x) with nonpositive-integer first argument, the terminating
2F0 sum, generalized Laguerre polynomials, integer-order Bessel J and I,
and log-factorials.  Evaluation strategies are chosen for stability at
large degree (three-term recurrences, Miller-style normalized downward
recurrence), never naive alternating series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SpecValue",
    "log_factorial",
    "kummer_phi",
    "kummer_phi_seq",
    "hyp2f0_poly",
    "laguerre",
    "laguerre_seq",
    "bessel_j",
    "bessel_j_seq",
    "bessel_i",
    "bessel_i_scaled",
]


@dataclass(frozen=True)
class SpecValue:
    """A function value with an optional natural-log scaling exponent.

    The represented number is ``value * exp(log_scale)``; ``log_scale == 0``
    means ``value`` is the plain function value.
    """

    value: float
    log_scale: float = 0.0

    def unscaled(self) -> float:
        return self.value * math.exp(self.log_scale)


# logs of exact integer factorials (<= 1 ulp each); beyond 170! the factorial
# overflows double and lgamma's ~2 ulp sits below representability anyway
_LOG_FACTORIAL_TABLE = tuple(math.log(math.factorial(n)) for n in range(171))


def log_factorial(n: int) -> float:
    """Natural log of n!: exact-integer log table for n <= 170, lgamma above."""
    if n < 0:
        raise ValueError("log_factorial requires n >= 0")
    if n <= 170:
        return _LOG_FACTORIAL_TABLE[n]
    return math.lgamma(n + 1)


def kummer_phi_seq(nmax: int, b: int, x: float) -> np.ndarray:
    """All values Phi(-n, b; x) for n = 0..nmax.

    Uses the three-term recurrence in the degree,

        Phi(-(n+1), b; x) = ((b + 2n - x) Phi(-n) - n Phi(-(n-1))) / (n + b),

    which follows from the contiguous recurrence
    a*Phi(a+1) + (a-b)*Phi(a-1) + (b-2a-x)*Phi(a) = 0 at a = -n.  Forward
    recursion is stable here (the Laguerre-type solution dominates), unlike
    the alternating power series which loses all digits near n ~ 60.

    Parameters
    ----------
    nmax : int
        Largest degree, >= 0.
    b : int
        Second parameter, >= 1.
    x : float
        Argument, any finite real.

    Returns
    -------
    ndarray, shape (nmax+1,)
    """
    if nmax < 0:
        raise ValueError("kummer_phi_seq requires nmax >= 0")
    if b < 1:
        raise ValueError("kummer_phi_seq requires integer b >= 1")
    out = np.empty(nmax + 1)
    out[0] = 1.0
    if nmax == 0:
        return out
    out[1] = 1.0 - x / b
    for n in range(1, nmax):
        out[n + 1] = ((b + 2 * n - x) * out[n] - n * out[n - 1]) / (n + b)
    return out


def kummer_phi(n: int, b: int, x: float) -> float:
    """Kummer function Phi(-n, b; x), a degree-n polynomial in x.

    Parameters
    ----------
    n : int
        Nonnegative; the first parameter is -n.
    b : int
        Positive integer second parameter.
    x : float
        Real argument.
    """
    if n < 0:
        raise ValueError("kummer_phi requires n >= 0")
    if b < 1:
        raise ValueError("kummer_phi requires integer b >= 1")
    f_prev, f = 1.0, 1.0 - x / b
    if n == 0:
        return f_prev
    for m in range(1, n):
        f_prev, f = f, ((b + 2 * m - x) * f - m * f_prev) / (m + b)
    return f


def hyp2f0_poly(m: int, n: int, x: float) -> float:
    """Terminating sum 2F0(-m, -n; x) = sum_j (-m)_j (-n)_j x^j / j!.

    Exactly symmetric in (m, n): arguments are ordered before summation so
    swapped calls produce bit-identical results.
    """
    if m < 0 or n < 0:
        raise ValueError("hyp2f0_poly requires m, n >= 0")
    if m > n:
        m, n = n, m
    s = 1.0
    t = 1.0
    for j in range(m):
        t *= (m - j) * (n - j) * x / (j + 1)
        s += t
    return s


def laguerre_seq(nmax: int, k: int, x: float) -> np.ndarray:
    """Generalized Laguerre polynomials L^k_n(x) for n = 0..nmax.

    Standard three-term recurrence
    (n+1) L_{n+1} = (2n+1+k-x) L_n - (n+k) L_{n-1}.
    """
    if nmax < 0 or k < 0:
        raise ValueError("laguerre_seq requires nmax, k >= 0")
    out = np.empty(nmax + 1)
    out[0] = 1.0
    if nmax == 0:
        return out
    out[1] = 1.0 + k - x
    for n in range(1, nmax):
        out[n + 1] = ((2 * n + 1 + k - x) * out[n] - (n + k) * out[n - 1]) / (n + 1)
    return out


def laguerre(n: int, k: int, x: float) -> float:
    """Generalized Laguerre polynomial L^k_n(x)."""
    if n < 0 or k < 0:
        raise ValueError("laguerre requires n, k >= 0")
    p_prev, p = 1.0, 1.0 + k - x
    if n == 0:
        return p_prev
    for m in range(1, n):
        p_prev, p = p, ((2 * m + 1 + k - x) * p - (m + k) * p_prev) / (m + 1)
    return p


def _bessel_start_index(base: int) -> int:
    # Start far enough above max(order, argument) that the minimal solution
    # dominates the downward recursion at the turning point.
    return base + 40 + int(10.0 * (base + 1) ** (1.0 / 3.0)) + int(2.0 * math.sqrt(base + 1))


def bessel_j_seq(nmax: int, x: float) -> np.ndarray:
    """J_0(x)..J_nmax(x) for x >= 0 by normalized downward recurrence.

    Miller's algorithm: recurse J_{k-1} = (2k/x) J_k - J_{k+1} downward from a
    start index well above max(nmax, x), then normalize with
    J_0 + 2 sum_{k>=1} J_{2k} = 1.
    """
    if nmax < 0:
        raise ValueError("bessel_j_seq requires nmax >= 0")
    if x < 0:
        raise ValueError("bessel_j_seq requires x >= 0")
    out = np.zeros(nmax + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    base = max(nmax, int(math.ceil(x)))
    start = _bessel_start_index(base)
    j_up, j_cur = 0.0, 1e-300
    even_sum = 0.0
    for k in range(start, -1, -1):
        j_down = (2.0 * (k + 1) / x) * j_cur - j_up
        j_up, j_cur = j_cur, j_down
        if abs(j_cur) > 1e250:
            j_cur *= 1e-250
            j_up *= 1e-250
            even_sum *= 1e-250
            out *= 1e-250
        if k <= nmax:
            out[k] = j_cur
        if k > 0 and k % 2 == 0:
            even_sum += 2.0 * j_cur
    return out / (j_cur + even_sum)


def _bessel_j_series(nu: int, x: float) -> float:
    # Ascending series with compensated summation; used only where the terms
    # do not alternate destructively (x small or order dominating argument).
    q = 0.25 * x * x
    term = math.exp(nu * math.log(0.5 * x) - log_factorial(nu)) if x > 0 else (1.0 if nu == 0 else 0.0)
    s = 0.0
    comp = 0.0
    j = 0
    while True:
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
        j += 1
        term *= -q / (j * (j + nu))
        if abs(term) <= 1e-18 * abs(s) + 5e-324 or j > 400:
            return s


def bessel_j(nu: int, x: float) -> float:
    """Bessel function of the first kind, integer order.

    Negative orders via J_{-nu} = (-1)^nu J_nu, negative arguments via
    J_nu(-x) = (-1)^nu J_nu(x).
    """
    sign = 1.0
    if nu < 0:
        nu = -nu
        if nu % 2:
            sign = -sign
    if x < 0:
        x = -x
        if nu % 2:
            sign = -sign
    if x == 0.0:
        return sign if nu == 0 else 0.0
    if x <= 6.0 or x * x <= 4.0 * (nu + 1):
        return sign * _bessel_j_series(nu, x)
    return sign * bessel_j_seq(nu, x)[nu]


def _bessel_i_scaled_seq(nmax: int, x: float) -> np.ndarray:
    # e^{-x} I_k(x) for k = 0..nmax via downward recurrence normalized with
    # I_0 + 2 sum_{k>=1} I_k = e^x.
    out = np.zeros(nmax + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    base = max(nmax, int(math.ceil(x)))
    start = _bessel_start_index(base)
    i_up, i_cur = 0.0, 1e-300
    total = 0.0
    for k in range(start, -1, -1):
        i_down = (2.0 * (k + 1) / x) * i_cur + i_up
        i_up, i_cur = i_cur, i_down
        if abs(i_cur) > 1e250:
            i_cur *= 1e-250
            i_up *= 1e-250
            total *= 1e-250
            out *= 1e-250
        if k <= nmax:
            out[k] = i_cur
        if k > 0:
            total += 2.0 * i_cur
    return out / (i_cur + total)


def _bessel_i_series(nu: int, x: float) -> float:
    q = 0.25 * x * x
    term = math.exp(nu * math.log(0.5 * x) - log_factorial(nu)) if x > 0 else (1.0 if nu == 0 else 0.0)
    s = 0.0
    j = 0
    while True:
        s += term
        j += 1
        term *= q / (j * (j + nu))
        if term <= 1e-18 * s + 5e-324 or j > 500:
            return s


def bessel_i_scaled(nu: int, x: float) -> SpecValue:
    """Modified Bessel I_nu(x), scaled when the plain value would be huge.

    Returns ``SpecValue(e^{-x} I_nu(x), log_scale=x)`` for x > 500 and the
    plain value (log_scale 0) otherwise.
    """
    if x < 0:
        raise ValueError("bessel_i_scaled requires x >= 0")
    nu = abs(nu)
    if x <= 30.0:
        return SpecValue(_bessel_i_series(nu, x), 0.0)
    scaled = _bessel_i_scaled_seq(nu, x)[nu]
    if x > 500.0:
        return SpecValue(scaled, x)
    return SpecValue(scaled * math.exp(x), 0.0)


def bessel_i(nu: int, x: float) -> float:
    """Modified Bessel function of the first kind, integer order, x >= 0.

    For x > 500 prefer :func:`bessel_i_scaled`; the plain value overflows
    near x ~ 709.
    """
    return bessel_i_scaled(nu, x).unscaled()

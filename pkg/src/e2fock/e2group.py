"""The Euclidean group E(2) acting on the Heisenberg algebra.

A group element g = (r, psi, phi) acts on the generators as

    gz = e^{i phi} z + r e^{i psi} 1,      gz* = (gz)*,

i.e. a rotation by phi composed with a translation by r e^{i psi}.  This
module provides the group operations, the closed-form matrix elements of the
unitary operator U(g) implementing the action on Fock space by conjugation,
and the irreducible matrix elements t^lambda_{kn}(g) built from Bessel
functions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .specfun import bessel_j, log_factorial

__all__ = [
    "GroupElement",
    "IrrepLabel",
    "identity",
    "compose",
    "inverse",
    "act_on_generator",
    "u_matrix_element",
    "u_matrix",
    "irrep_element",
]

_TWO_PI = 2.0 * math.pi


def _wrap_angle(x: float) -> float:
    # normalize to (-pi, pi]
    w = math.fmod(x, _TWO_PI)
    if w > math.pi:
        w -= _TWO_PI
    elif w <= -math.pi:
        w += _TWO_PI
    return w


@dataclass(frozen=True)
class GroupElement:
    """E(2) element: translation modulus r, translation phase psi, rotation phi.

    Angles are stored normalized to (-pi, pi]; psi is canonicalized to 0 when
    r vanishes (it is unphysical there).
    """

    r: float
    psi: float
    phi: float

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("translation modulus r must be >= 0")
        r = self.r
        psi = _wrap_angle(self.psi)
        if r < 1e-15:
            r, psi = 0.0, 0.0
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "phi", _wrap_angle(self.phi))

    @property
    def w(self) -> complex:
        """Translation as a complex number r e^{i psi}."""
        return self.r * cmath.exp(1j * self.psi)


@dataclass(frozen=True)
class IrrepLabel:
    """Label (lam, k): positive real weight and integer row index."""

    lam: float
    k: int = 0

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("irrep weight lam must be > 0")


def identity() -> GroupElement:
    return GroupElement(0.0, 0.0, 0.0)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Group product, read off the 3x3 matrix form: g2's matrix applies first.

    Rotation angles add; translations compose as w1 + e^{i phi1} w2.
    """
    w = g1.w + cmath.exp(1j * g1.phi) * g2.w
    r = abs(w)
    psi = cmath.phase(w) if r >= 1e-15 else 0.0
    return GroupElement(r, psi, g1.phi + g2.phi)


def inverse(g: GroupElement) -> GroupElement:
    """Inverse element: rotation -phi, translation -e^{-i phi} w."""
    return GroupElement(g.r, g.psi - g.phi + math.pi, -g.phi)


def act_on_generator(g: GroupElement) -> tuple[complex, complex]:
    """The pair (alpha, beta) with gz = alpha z + beta 1."""
    return cmath.exp(1j * g.phi), g.w


def _scaled_matrix_moduli(r: float, d: int, count: int) -> np.ndarray:
    """|<m|U|m+d>| / e^{-r^2/2} for m = 0..count-1 at diagonal offset d >= 0.

    S_m = r^d sqrt(m!/(m+d)!) L^{(d)}_m(r^2), run as a self-scaled recurrence
    so intermediates stay O(1) (the matrix elements are bounded by 1).
    """
    x = r * r
    s = np.empty(count)
    s[0] = math.exp(d * math.log(r) - 0.5 * log_factorial(d)) if d > 0 else 1.0
    if count == 1:
        return s
    s[1] = (1.0 + d - x) * s[0] / math.sqrt(1.0 + d)
    for m in range(1, count - 1):
        s[m + 1] = ((2 * m + 1 + d - x) * s[m] - math.sqrt(m * (m + d)) * s[m - 1]) / math.sqrt(
            (m + 1) * (m + 1 + d)
        )
    return s


def u_matrix_element(g: GroupElement, m: int, n: int) -> complex:
    """Matrix element <m|U(g)|n> of the unitary implementing g.

    Closed form: (-1)^m e^{i(m-n)psi - i m phi} r^{n+m} e^{-r^2/2} / sqrt(n! m!)
    times 2F0(-m, -n; -1/r^2), evaluated through the equivalent scaled
    Laguerre recurrence; the r -> 0 limit is the rotation diagonal
    delta_{mn} e^{-i n phi}.
    """
    if m < 0 or n < 0:
        raise ValueError("matrix element indices must be >= 0")
    if g.r < 1e-12:
        return cmath.exp(-1j * n * g.phi) if m == n else 0.0
    lo, d = min(m, n), abs(m - n)
    modulus = math.exp(-0.5 * g.r * g.r) * _scaled_matrix_moduli(g.r, d, lo + 1)[lo]
    phase = cmath.exp(1j * ((m - n) * g.psi - m * g.phi))
    if m > n:
        phase *= (-1) ** (m - n)
    return phase * modulus


def u_matrix(g: GroupElement, dim: int) -> np.ndarray:
    """The truncated operator U(g), assembled diagonal by diagonal.

    Entries are the exact infinite-dimensional matrix elements (no truncation
    error in the entries themselves); only products/conjugations of truncated
    matrices acquire boundary artifacts.
    """
    if dim < 2:
        raise ValueError("Fock truncation dimension must be >= 2")
    U = np.zeros((dim, dim), dtype=complex)
    ms = np.arange(dim)
    if g.r < 1e-12:
        U[ms, ms] = np.exp(-1j * ms * g.phi)
        return U
    damp = math.exp(-0.5 * g.r * g.r)
    for d in range(dim):
        vals = damp * _scaled_matrix_moduli(g.r, d, dim - d)
        m = ms[: dim - d]
        n = m + d
        U[m, n] = np.exp(1j * ((m - n) * g.psi - m * g.phi)) * vals
        if d > 0:
            sign = (-1) ** d
            U[n, m] = sign * np.exp(1j * ((n - m) * g.psi - n * g.phi)) * vals
    return U


def irrep_element(label: IrrepLabel, k: int, n: int, g: GroupElement) -> complex:
    """Irreducible matrix element t^lam_{kn}(g) = i^{n-k} e^{-i(n phi + (k-n) psi)} J_{n-k}(lam r)."""
    return (
        1j ** ((n - k) % 4)
        * cmath.exp(-1j * (n * g.phi + (k - n) * g.psi))
        * bessel_j(n - k, label.lam * g.r)
    )

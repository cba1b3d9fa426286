"""The Hilbert space of square-integrable functions on the Heisenberg algebra.

Elements are finite sums F = sum_n (f_n(zeta) z^n + z*^n f_{-n}(zeta)) with
radial coefficients f_n supported on the integer spectrum of zeta = z*z.
Storage convention: ``terms[w]`` holds the coefficient sequence of winding w,
meaning f(zeta) z^w for w > 0, z*^{|w|} f(zeta) for w < 0, and the diagonal
part for w = 0.

The scalar product is the operator trace (F, G) = tr(F* G), evaluated in
closed form over the radial coefficients.  The infinitesimal generators of
the group action are realized exactly as difference operators on the
coefficients:

    p(F) = 2[F, z*],   pbar(F) = 2[z, F],   h(F) = [zeta, F],

with the real structure p* = -pbar, h* = h.  Joint eigenfunctions of (p p*, h)
are built from Kummer functions by :func:`basis_d`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .e2group import GroupElement, IrrepLabel, u_matrix
from .specfun import kummer_phi_seq

__all__ = [
    "AlgebraFunction",
    "BasisFunction",
    "algebra_function",
    "inner_product",
    "hs_norm",
    "to_matrix",
    "op_p",
    "op_pbar",
    "op_h",
    "adjoint_p",
    "basis_d",
    "basis_recurrence_residual",
    "eigen_residuals",
    "act_T",
]


@dataclass(frozen=True)
class AlgebraFunction:
    """Finite sum of single-winding terms with radial coefficients.

    ``terms`` maps the winding index to a complex array of length zmax+1;
    coefficients beyond zmax are implicitly zero.  Treat instances as
    immutable values.
    """

    terms: Mapping[int, np.ndarray]
    zmax: int

    def windings(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, w: int) -> np.ndarray:
        c = self.terms.get(w)
        if c is None:
            return np.zeros(self.zmax + 1, dtype=complex)
        return c

    def adjoint(self) -> "AlgebraFunction":
        """F*: windings flip sign, coefficients conjugate."""
        return algebra_function({-w: np.conj(c) for w, c in self.terms.items()}, self.zmax)

    def scaled(self, a: complex) -> "AlgebraFunction":
        return algebra_function({w: a * c for w, c in self.terms.items()}, self.zmax)

    def __add__(self, other: "AlgebraFunction") -> "AlgebraFunction":
        zmax = max(self.zmax, other.zmax)
        out: dict[int, np.ndarray] = {}
        for w in set(self.terms) | set(other.terms):
            c = np.zeros(zmax + 1, dtype=complex)
            for src in (self, other):
                cs = src.terms.get(w)
                if cs is not None:
                    c[: len(cs)] += cs
            out[w] = c
        return AlgebraFunction(out, zmax)


def algebra_function(terms: Mapping[int, "np.ndarray | list"], zmax: int | None = None) -> AlgebraFunction:
    """Build an AlgebraFunction, padding all coefficient arrays to zmax+1."""
    arrays = {int(w): np.asarray(c, dtype=complex) for w, c in terms.items()}
    if zmax is None:
        zmax = max((len(c) - 1 for c in arrays.values()), default=0)
    out = {}
    for w, c in arrays.items():
        if len(c) > zmax + 1:
            raise ValueError("coefficient array longer than zmax+1")
        padded = np.zeros(zmax + 1, dtype=complex)
        padded[: len(c)] = c
        out[w] = padded
    return AlgebraFunction(out, zmax)


@dataclass(frozen=True)
class BasisFunction:
    """Joint eigenfunction D_k of the radial Casimir and the winding grading.

    Stored as a single-winding AlgebraFunction (winding -k, so k >= 0 terms
    are z*^k f(zeta)); the k-phase convention is (i*lam)^|k| / (2^|k| |k|!).
    """

    label: IrrepLabel
    coefficients: AlgebraFunction
    phase_convention: str = "(i*lam)^k"

    @property
    def radial(self) -> np.ndarray:
        return self.coefficients.terms[-self.label.k]


def _winding_weights(a: int, zmax: int) -> np.ndarray:
    """(zeta+a)!/zeta! for zeta = 0..zmax, the trace weight of winding +-a."""
    z = np.arange(zmax + 1, dtype=float)
    if a == 0:
        return np.ones(zmax + 1)
    return np.exp(np.sum(np.log(z[:, None] + np.arange(1, a + 1)), axis=1))


def inner_product(F: AlgebraFunction, G: AlgebraFunction) -> complex:
    """Trace scalar product (F, G) = tr(F* G) in closed form.

    Only matching windings contribute; winding w contributes
    sum_zeta conj(f_w) g_w (zeta+|w|)!/zeta!.
    """
    total = 0.0 + 0.0j
    for w in F.terms:
        if w not in G.terms:
            continue
        cf, cg = F.terms[w], G.terms[w]
        m = min(len(cf), len(cg))
        total += np.sum(np.conj(cf[:m]) * cg[:m] * _winding_weights(abs(w), m - 1))
    return complex(total)


def hs_norm(F: AlgebraFunction) -> float:
    """Hilbert-Schmidt (trace) norm sqrt((F, F))."""
    return math.sqrt(max(inner_product(F, F).real, 0.0))


def to_matrix(F: AlgebraFunction, dim: int) -> np.ndarray:
    """Realize F as a truncated Fock operator.

    Winding w > 0 places c(zeta) sqrt((zeta+w)!/zeta!) at (zeta, zeta+w);
    winding w < 0 mirrors below the diagonal; w = 0 is the diagonal.
    """
    wmax = max((abs(w) for w in F.terms), default=0)
    if dim < F.zmax + wmax + 2:
        raise ValueError(f"dim={dim} too small: need >= zmax + max winding + 2 = {F.zmax + wmax + 2}")
    M = np.zeros((dim, dim), dtype=complex)
    for w, c in F.terms.items():
        a = abs(w)
        zs = np.arange(min(len(c), dim - a))
        vals = c[: len(zs)] * np.sqrt(_winding_weights(a, len(zs) - 1))
        if w >= 0:
            M[zs, zs + a] += vals
        else:
            M[zs + a, zs] += vals
    return M


def _apply_stencils(F: AlgebraFunction, lowering: bool) -> AlgebraFunction:
    # p (lowering=True) maps winding w -> w-1; pbar maps w -> w+1.  On the
    # side where the ladder acts against the z-power, the exact commutator
    # gives 2(w_like c(zeta) + zeta (c(zeta) - c(zeta-1))); on the other side
    # it is the plain forward difference 2(c(zeta+1) - c(zeta)).
    out: dict[int, np.ndarray] = {}
    zin = F.zmax
    for w, c in F.terms.items():
        new = np.zeros(zin + 2, dtype=complex)
        against = (w >= 1) if lowering else (w <= -1)
        if against:
            mult = w if lowering else -w
            c_pad = np.concatenate((c, [0.0]))
            c_prev = np.concatenate(([0.0], c))
            zeta = np.arange(zin + 2, dtype=float)
            new[:] = 2.0 * (mult * c_pad + zeta * (c_pad - c_prev))
        else:
            new[:zin] = 2.0 * (c[1:] - c[:-1])
            new[zin] = -2.0 * c[zin]
        w_out = w - 1 if lowering else w + 1
        if w_out in out:
            out[w_out] = out[w_out] + new
        else:
            out[w_out] = new
    return AlgebraFunction(out, zin + 1)


def op_p(F: AlgebraFunction) -> AlgebraFunction:
    """p(F) = 2[F, z*], exact on radial coefficients; winding drops by one."""
    return _apply_stencils(F, lowering=True)


def op_pbar(F: AlgebraFunction) -> AlgebraFunction:
    """pbar(F) = 2[z, F], exact on radial coefficients; winding rises by one."""
    return _apply_stencils(F, lowering=False)


def op_h(F: AlgebraFunction) -> AlgebraFunction:
    """h(F) = [zeta, F]: winding-w terms are scaled by -w (z*^k terms by +k)."""
    return algebra_function({w: -w * np.asarray(c) for w, c in F.terms.items()}, F.zmax)


def adjoint_p(F: AlgebraFunction) -> AlgebraFunction:
    """p* = -pbar, the trace-adjoint of p."""
    return op_pbar(F).scaled(-1.0)


def basis_d(label: IrrepLabel, zmax: int) -> BasisFunction:
    """Eigenbasis element D_k with radial part a Kummer polynomial sequence.

    f_k(zeta) = ((i lam)^a / (2^a a!)) e^{-lam^2/8} Phi(-zeta, 1+a; lam^2/4)
    with a = |k|; stored at winding -k (z*^k f for k >= 0, f z^|k| for k < 0).
    The true eigenfunction has infinite radial support; zmax is a truncation,
    so statements at the boundary point must be excluded.
    """
    if zmax < 1:
        raise ValueError("basis_d requires zmax >= 1")
    lam, k = label.lam, label.k
    a = abs(k)
    pref = (1j * lam) ** a / (2.0**a * math.factorial(a)) * math.exp(-lam * lam / 8.0)
    radial = pref * kummer_phi_seq(zmax, 1 + a, lam * lam / 4.0).astype(complex)
    return BasisFunction(label, algebra_function({-k: radial}, zmax))


def basis_recurrence_residual(label: IrrepLabel, zmax: int) -> float:
    """Max pointwise residual of the three-term radial recurrence

        (a+1+zeta) f(zeta+1) + (lam^2/4 - 2 zeta - a - 1) f(zeta) + zeta f(zeta-1) = 0,

    relative to the local term-magnitude scale, over zeta <= zmax-1.
    """
    lam, a = label.lam, abs(label.k)
    f = basis_d(IrrepLabel(label.lam, a), zmax).radial
    z = np.arange(zmax, dtype=float)
    t1 = (a + 1 + z) * f[1:]
    t2 = (lam * lam / 4.0 - 2 * z - a - 1) * f[:-1]
    t3 = z * np.concatenate(([0.0], f[:-2]))
    scale = np.maximum(np.abs(t1), np.maximum(np.abs(t2), np.abs(t3)))
    resid = np.abs(t1 + t2 + t3)
    # rows where every term vanishes identically satisfy the recurrence exactly
    live = scale > 0
    return float(np.max(resid[live] / scale[live])) if np.any(live) else 0.0


def eigen_residuals(label: IrrepLabel, zmax: int) -> tuple[float, float]:
    """Residuals of the two eigen-equations for D_k.

    Returns ``(c1, c2)``: c1 is the max pointwise relative residual of
    p p* D = lam^2 D over the interior zeta <= zmax-2 (the boundary is
    excluded because the truncated radial part feigns finite support);
    c2 is the residual of h D = k D, which is exactly zero.

    p p* and p* p coincide here (the translation generators commute, so
    [p, pbar] = 0); both orderings are evaluated and the larger residual is
    reported.
    """
    basis = basis_d(label, zmax)
    D, f = basis.coefficients, basis.radial
    lam, k = label.lam, label.k

    pp_star = op_p(op_pbar(D).scaled(-1.0))
    star_pp = op_pbar(op_p(D).scaled(-1.0))

    z = np.arange(zmax - 1, dtype=float)
    a = abs(k)
    scale = 4.0 * (
        (a + 1 + z) * np.abs(f[1:zmax])
        + (a + 1 + 2 * z + lam * lam / 4.0) * np.abs(f[: zmax - 1])
        + z * np.abs(np.concatenate(([0.0], f[: zmax - 2])))
    )
    c1 = 0.0
    for casimir in (pp_star, star_pp):
        resid = casimir.coeff(-k)[: zmax - 1] - lam * lam * f[: zmax - 1]
        c1 = max(c1, float(np.max(np.abs(resid) / scale)))

    graded = op_h(D)
    c2 = 0.0
    for w, c in graded.terms.items():
        diff = c - k * D.coeff(w)[: len(c)]
        c2 = max(c2, float(np.max(np.abs(diff))))
    return c1, c2


def act_T(g: GroupElement, F: AlgebraFunction, dim: int) -> np.ndarray:
    """The regular action T(g)F = U(g) F U(g)*, as a truncated Fock matrix."""
    U = u_matrix(g, dim)
    return U @ to_matrix(F, dim) @ U.conj().T

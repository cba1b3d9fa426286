"""Unitary representations of the Euclidean group E(2) on the Heisenberg algebra.

The plane Euclidean group acts as automorphisms of the algebra [z, z*] = 1.
This package realizes that action concretely:

* ``specfun``  -- stable scalar special functions (Kummer polynomials,
  terminating 2F0, Laguerre, integer-order Bessel J and I, log-factorials);
* ``fock``     -- truncated Fock-space operators, displaced vacua and bases,
  safe-block truncation bookkeeping;
* ``e2group``  -- group elements, composition, closed-form matrix elements of
  the implementing unitary U(g), Bessel-type irreducible matrix elements;
* ``repk``     -- the trace-inner-product space of functions on the algebra,
  exact difference-operator generators, and the Kummer eigenbasis D_k;
* ``identities`` -- machine checks for the addition theorem, the two sandwich
  identities, the bilinear Laguerre sum, orthogonality concentration, and the
  classical and Bessel limits;
* ``cli``      -- the ``e2fock verify`` / ``e2fock table`` command line.
"""

from .e2group import (
    GroupElement,
    IrrepLabel,
    act_on_generator,
    compose,
    identity,
    inverse,
    irrep_element,
    u_matrix,
    u_matrix_element,
)
from .fock import (
    annihilator,
    boundary_margin,
    commutator_defect,
    creator,
    displaced_basis,
    displaced_vacuum,
    number_op,
    safe_block,
)
from .identities import (
    CheckReport,
    addition_residual,
    addition_vacuum_crosscheck,
    classical_limit_error,
    classical_limit_errors,
    hille_hardy_residual,
    identity_a,
    identity_b,
    kummer_bessel_limit_residual,
    orthogonality_profile,
    orthogonality_profile_curve,
)
from .repk import (
    AlgebraFunction,
    BasisFunction,
    act_T,
    adjoint_p,
    algebra_function,
    basis_d,
    basis_recurrence_residual,
    eigen_residuals,
    hs_norm,
    inner_product,
    op_h,
    op_p,
    op_pbar,
    to_matrix,
)
from .specfun import (
    SpecValue,
    bessel_i,
    bessel_i_scaled,
    bessel_j,
    bessel_j_seq,
    hyp2f0_poly,
    kummer_phi,
    kummer_phi_seq,
    laguerre,
    laguerre_seq,
    log_factorial,
)

__version__ = "0.1.0"

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
    "annihilator",
    "creator",
    "number_op",
    "commutator_defect",
    "boundary_margin",
    "safe_block",
    "displaced_vacuum",
    "displaced_basis",
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
    "CheckReport",
    "identity_a",
    "identity_b",
    "addition_residual",
    "addition_vacuum_crosscheck",
    "hille_hardy_residual",
    "orthogonality_profile",
    "orthogonality_profile_curve",
    "classical_limit_error",
    "classical_limit_errors",
    "kummer_bessel_limit_residual",
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
    "__version__",
]

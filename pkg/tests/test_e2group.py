import cmath
import math

import numpy as np
import pytest
from scipy.linalg import expm

from e2fock.e2group import (
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
from e2fock.fock import annihilator, displaced_basis, displaced_vacuum, safe_block
from e2fock.specfun import bessel_j, bessel_j_seq, hyp2f0_poly, log_factorial

from conftest import group_matrix3

GENERIC = [
    GroupElement(0.9, 0.3, 1.1),
    GroupElement(1.4, -0.8, 0.5),
    GroupElement(0.2, 2.9, -2.7),
    GroupElement(2.0, -3.0, 3.1),
]


def element_from_matrix(M):
    return GroupElement(abs(M[0, 2]), cmath.phase(M[0, 2]) if abs(M[0, 2]) > 1e-15 else 0.0, cmath.phase(M[0, 0]))


class TestGroupElement:
    def test_normalization(self):
        g = GroupElement(1.0, 7.0, -9.0)
        assert -math.pi < g.psi <= math.pi
        assert -math.pi < g.phi <= math.pi

    def test_psi_canonical_at_origin(self):
        g = GroupElement(0.0, 2.0, 0.5)
        assert g.psi == 0.0 and g.r == 0.0

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            GroupElement(-0.1, 0, 0)

    def test_irrep_label_positive_weight(self):
        with pytest.raises(ValueError):
            IrrepLabel(0.0, 1)


class TestComposition:
    def test_identity_neutral(self):
        for g in GENERIC:
            h = compose(g, identity())
            assert (h.r, h.psi, h.phi) == pytest.approx((g.r, g.psi, g.phi), abs=1e-15)

    def test_inverse_roundtrip(self):
        for g in GENERIC:
            h = compose(g, inverse(g))
            assert h.r <= 1e-14
            assert abs(h.phi) <= 1e-14

    def test_pure_translation_doubling(self):
        h = compose(GroupElement(1, 0, 0), GroupElement(1, 0, 0))
        assert (h.r, h.psi, h.phi) == pytest.approx((2.0, 0.0, 0.0), abs=1e-15)

    def test_translation_inverse_flips_phase(self):
        g = GroupElement(1.3, 0.4, 0.0)
        gi = inverse(g)
        assert (gi.r, gi.psi, gi.phi) == pytest.approx((1.3, 0.4 + math.pi - 2 * math.pi, 0.0), abs=1e-15)

    def test_matches_matrix_product(self):
        for g1 in GENERIC:
            for g2 in GENERIC:
                h = compose(g1, g2)
                ref = element_from_matrix(group_matrix3(g1) @ group_matrix3(g2))
                assert np.max(np.abs(group_matrix3(h) - group_matrix3(ref))) <= 1e-14

    def test_associative(self):
        g1, g2, g3 = GENERIC[:3]
        a = compose(compose(g1, g2), g3)
        b = compose(g1, compose(g2, g3))
        assert np.max(np.abs(group_matrix3(a) - group_matrix3(b))) <= 1e-14

    def test_inverse_matches_matrix_inverse(self):
        g = GroupElement(1, 0, math.pi / 2)
        ref = element_from_matrix(np.linalg.inv(group_matrix3(g)))
        gi = inverse(g)
        assert np.max(np.abs(group_matrix3(gi) - group_matrix3(ref))) <= 1e-14

    def test_inverse_of_identity(self):
        assert inverse(identity()) == identity()


class TestGeneratorAction:
    def test_identity(self):
        assert act_on_generator(identity()) == (1 + 0j, 0j)

    def test_pure_translation(self):
        alpha, beta = act_on_generator(GroupElement(1.5, 0.8, 0))
        assert alpha == pytest.approx(1.0)
        assert beta == pytest.approx(1.5 * cmath.exp(0.8j))

    def test_rotation_unit_modulus(self):
        for g in GENERIC:
            alpha, _ = act_on_generator(g)
            assert abs(alpha) == pytest.approx(1.0, rel=1e-15)


class TestMatrixElement:
    def test_vacuum_element(self):
        for g in GENERIC:
            assert u_matrix_element(g, 0, 0) == pytest.approx(math.exp(-g.r**2 / 2), rel=1e-13)

    def test_rotation_only_diagonal(self):
        g = GroupElement(0.0, 0.0, 1.2)
        assert u_matrix_element(g, 3, 3) == pytest.approx(cmath.exp(-3.6j), rel=1e-15)
        assert u_matrix_element(g, 2, 3) == 0

    def test_node_at_unit_radius(self):
        assert abs(u_matrix_element(GroupElement(1, 0, 0), 1, 1)) <= 1e-15

    @pytest.mark.parametrize("r", [0.25, 0.5, 1.0, 2.0, 4.0])
    def test_hyp2f0_route(self, r):
        # direct closed form through the terminating 2F0 sum; residual scale
        # includes the largest 2F0 term to stay meaningful at polynomial nodes
        g = GroupElement(r, 0.7, 0.3)
        for m in (0, 1, 2, 7, 13, 25):
            for n in (0, 3, 11, 25):
                pref = math.exp(
                    (n + m) * math.log(r) - r * r / 2 - 0.5 * (log_factorial(n) + log_factorial(m))
                )
                direct = (
                    (-1.0) ** m
                    * cmath.exp(1j * ((m - n) * g.psi - m * g.phi))
                    * pref
                    * hyp2f0_poly(m, n, -1.0 / (r * r))
                )
                got = u_matrix_element(g, m, n)
                # largest term of the 2F0 sum, for the residual scale
                jmax = min(m, n)
                terms = [
                    math.exp(
                        log_factorial(m)
                        - log_factorial(m - j)
                        + log_factorial(n)
                        - log_factorial(n - j)
                        - log_factorial(j)
                        - 2 * j * math.log(r)
                    )
                    for j in range(jmax + 1)
                ]
                scale = max(abs(got), abs(direct), pref * max(terms))
                assert abs(got - direct) <= 1e-10 * scale


class TestUMatrix:
    def test_identity_element(self):
        assert np.array_equal(u_matrix(identity(), 6), np.eye(6, dtype=complex))

    def test_column_zero_is_displaced_vacuum(self):
        for g in GENERIC:
            U = u_matrix(g, 64)
            assert np.max(np.abs(U[:, 0] - displaced_vacuum(g, 64))) <= 1e-10

    def test_columns_match_displaced_basis(self):
        g = GroupElement(1.0, 0.7, 0.3)
        dim = 64
        U = u_matrix(g, dim)
        for n in (1, 5, 12, 20):
            col = displaced_basis(g, dim, n)
            assert np.max(np.abs(U[:, n] - col)) <= 1e-9

    def test_element_agrees_with_matrix(self):
        g = GroupElement(1.3, -0.5, 0.9)
        U = u_matrix(g, 20)
        for m in (0, 3, 11, 19):
            for n in (0, 2, 14):
                assert U[m, n] == pytest.approx(u_matrix_element(g, m, n), rel=1e-13, abs=1e-250)

    @pytest.mark.parametrize("r", [0.5, 1.0, 1.5, 2.0])
    def test_unitarity_on_safe_block(self, r):
        g = GroupElement(r, 0.7, 0.3)
        dim = 64
        U = u_matrix(g, dim)
        b = safe_block(dim, r)
        defect = np.linalg.norm((U.conj().T @ U - np.eye(dim))[:b, :b])
        assert defect <= 1e-8

    def test_unitarity_defect_monotone_in_dim(self):
        # strictly decreasing until the float rounding floor, never above it after
        floor = 1e-13
        r = 1.5
        block = safe_block(32, r)
        defects = []
        for dim in (32, 64, 128):
            U = u_matrix(GroupElement(r, 0.7, 0.3), dim)
            defects.append(np.linalg.norm((U.conj().T @ U - np.eye(dim))[:block, :block]))
        for d1, d2 in zip(defects, defects[1:]):
            assert d2 <= max(d1, floor), defects
        assert defects[1] < defects[0]

    @pytest.mark.parametrize("r", [0.5, 1.0, 2.0])
    def test_intertwining(self, r):
        g = GroupElement(r, 0.7, 0.3)
        dim = 64
        U = u_matrix(g, dim)
        a = annihilator(dim)
        alpha, beta = act_on_generator(g)
        b = safe_block(dim, r)
        resid = np.max(np.abs((U @ a @ U.conj().T - alpha * a - beta * np.eye(dim))[:b, :b]))
        assert resid <= 1e-8

    @pytest.mark.parametrize("r", [0.5, 1.0, 1.5])
    def test_matrix_exponential_oracle(self, r):
        # exp(beta z* - conj(beta) z) exp(-i phi zeta) with beta forced by the
        # generator action; global phase fixed at the (0,0) entry
        g = GroupElement(r, 0.7, 0.3)
        dim = 64
        a = annihilator(dim)
        beta = -r * cmath.exp(1j * (g.psi - g.phi))
        oracle = expm(beta * a.conj().T - np.conj(beta) * a) @ expm(-1j * g.phi * (a.conj().T @ a))
        U = u_matrix(g, dim)
        phase = oracle[0, 0] / U[0, 0]
        assert abs(abs(phase) - 1.0) <= 1e-10
        b = safe_block(dim, r)
        assert np.max(np.abs((phase * U - oracle)[:b, :b])) <= 1e-8

    def test_matrix_exponential_oracle_random_elements(self, rng):
        dim = 48
        a = annihilator(dim)
        for _ in range(5):
            r = float(rng.uniform(0.1, 1.5))
            g = GroupElement(r, float(rng.uniform(-3, 3)), float(rng.uniform(-3, 3)))
            beta = -r * cmath.exp(1j * (g.psi - g.phi))
            oracle = expm(beta * a.conj().T - np.conj(beta) * a) @ expm(-1j * g.phi * (a.conj().T @ a))
            U = u_matrix(g, dim)
            phase = oracle[0, 0] / U[0, 0]
            b = safe_block(dim, r)
            assert np.max(np.abs((phase * U - oracle)[:b, :b])) <= 1e-8

    def test_entries_exact_near_truncation_edge(self):
        # entries are the infinite-dimensional matrix elements: no truncation
        # error even in the last rows/columns (60-digit reference)
        import mpmath as mp

        g = GroupElement(2.0, 0.7, 0.3)
        U = u_matrix(g, 96)
        with mp.workdps(60):
            for m, n in [(90, 85), (95, 95), (60, 93), (3, 92), (95, 0)]:
                r = mp.mpf(g.r)
                s = mp.mpf(0)
                for j in range(min(m, n) + 1):
                    s += mp.rf(-m, j) * mp.rf(-n, j) / mp.factorial(j) * (-1 / r**2) ** j
                ref = complex(
                    (-1) ** m
                    * mp.e ** (1j * ((m - n) * g.psi - m * g.phi))
                    * r ** (n + m)
                    * mp.e ** (-r * r / 2)
                    / mp.sqrt(mp.factorial(n) * mp.factorial(m))
                    * s
                )
                assert abs(U[m, n] - ref) <= 1e-13 * max(abs(ref), 1e-30)

    def test_largest_supported_truncation(self):
        U = u_matrix(GroupElement(2.0, 0.7, 0.3), 512)
        assert np.all(np.isfinite(U))
        assert np.max(np.abs(U)) <= 1.0 + 1e-12
        b = safe_block(512, 2.0)
        assert np.linalg.norm((U.conj().T @ U - np.eye(512))[:b, :b]) <= 1e-8

    def test_product_rule_with_cocycle(self):
        # U(g1) U(g2) = e^{i Im(w1 e^{i phi2} conj(w2))} U(g2 . g1): the
        # conjugation action composes against the matrix order and the
        # translation part contributes the canonical commutator phase
        dim = 64
        for g1 in GENERIC[:2]:
            for g2 in GENERIC[2:]:
                theta = (g1.w * cmath.exp(1j * g2.phi) * np.conj(g2.w)).imag
                lhs = u_matrix(g1, dim) @ u_matrix(g2, dim)
                rhs = cmath.exp(1j * theta) * u_matrix(compose(g2, g1), dim)
                b = safe_block(dim, max(g1.r + g2.r, 1.0))
                assert np.max(np.abs((lhs - rhs)[:b, :b])) <= 1e-8


class TestIrrepElements:
    def test_identity_is_kronecker(self):
        label = IrrepLabel(1.7)
        for k in (-3, 0, 2):
            for n in (-3, 0, 2):
                val = irrep_element(label, k, n, identity())
                assert val == pytest.approx(1.0 if k == n else 0.0, abs=1e-15)

    def test_translation_diagonal_is_j0(self):
        g = GroupElement(1.1, 0.6, 0.0)
        label = IrrepLabel(2.3)
        assert irrep_element(label, 0, 0, g) == pytest.approx(bessel_j(0, 2.3 * 1.1), rel=1e-13)

    def test_bounded_by_one(self):
        label = IrrepLabel(3.0)
        for g in GENERIC:
            for k in (-5, 0, 4):
                for n in (-6, 1, 7):
                    assert abs(irrep_element(label, k, n, g)) <= 1.0 + 1e-15

    def test_row_sum_rule(self):
        # sum_n |t_{kn}|^2 = sum J_{n-k}^2 = 1, truncated at |n-k| <= 60
        label = IrrepLabel(2.0)
        for g in GENERIC:
            seq = bessel_j_seq(60, label.lam * g.r)
            total = seq[0] ** 2 + 2 * np.sum(seq[1:] ** 2)
            assert total == pytest.approx(1.0, abs=1e-12)

    def test_homomorphism(self):
        label = IrrepLabel(1.3)
        trunc = 60
        for g1, g2 in [(GENERIC[0], GENERIC[1]), (GENERIC[2], GENERIC[3])]:
            g12 = compose(g1, g2)
            for k in (-2, 0, 1):
                for n in (-1, 0, 3):
                    acc = 0j
                    for j in range(k - trunc, k + trunc + 1):
                        acc += irrep_element(label, k, j, g1) * irrep_element(label, j, n, g2)
                    ref = irrep_element(label, k, n, g12)
                    assert abs(acc - ref) <= 1e-9

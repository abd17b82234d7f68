import cmath
import math

import numpy as np
import pytest

from qeslattice.fock import at_most, enumerate_basis
from qeslattice.momentum import (MomentumLabel, assemble_h_r, block_dimensions,
                                 build_momentum_vectors, closed_form_h12,
                                 closed_form_h22, expected_block_dimension,
                                 momentum_values, project_block)
from qeslattice.ops import build_hamiltonian, build_translation

SQRT2 = math.sqrt(2)


def labels_of(f):
    return [l.nu for l in momentum_values(f)]


def block_map(f, gamma, lam):
    return {b.label.nu: b for b in assemble_h_r(f, gamma, lam)}


# ------------------------------------------------------------- labels

def test_momentum_values_examples():
    assert labels_of(3) == [1, 0, -1]
    assert labels_of(4) == [2, 1, 0, -1]
    assert labels_of(1) == [0]


@pytest.mark.parametrize("f", range(1, 13))
def test_momentum_values_count_and_range(f):
    nus = labels_of(f)
    assert len(nus) == f
    assert nus == sorted(nus, reverse=True)
    if f % 2 == 1:
        assert max(nus) == (f - 1) // 2 and min(nus) == -(f - 1) // 2
    else:
        assert max(nus) == f // 2 and min(nus) == -f // 2 + 1


def test_rejects_foreign_label():
    with pytest.raises(ValueError):
        build_momentum_vectors(4, MomentumLabel(f=4, nu=-2))


# ------------------------------------------------------------- vectors

def test_two_site_antiperiodic_block_drops_pair_vector():
    vecs = build_momentum_vectors(2, MomentumLabel(f=2, nu=1))
    assert len(vecs) == 2  # psi_1(pi), psi_21(pi); the (1,1) orbit sums to zero


def test_three_site_zero_momentum_block_has_dimension_four():
    vecs = build_momentum_vectors(3, MomentumLabel(f=3, nu=0))
    assert len(vecs) == 4  # vacuum, psi_1, psi_21, psi_22


def test_four_site_block_dimensions():
    assert len(build_momentum_vectors(4, MomentumLabel(4, 1))) == 3
    assert len(build_momentum_vectors(4, MomentumLabel(4, -1))) == 3
    assert len(build_momentum_vectors(4, MomentumLabel(4, 2))) == 4
    assert len(build_momentum_vectors(4, MomentumLabel(4, 0))) == 5


def test_vacuum_appears_only_at_zero_momentum():
    basis = enumerate_basis(3, at_most(2))
    for label in momentum_values(3):
        vecs = build_momentum_vectors(3, label, basis)
        weights = [abs(v[0]) for v in vecs]
        if label.nu == 0:
            assert np.isclose(weights[0], 1.0)
        else:
            assert np.max(weights) < 1e-12


@pytest.mark.parametrize("f", range(1, 9))
def test_vectors_are_unit_translation_eigenvectors(f):
    basis = enumerate_basis(f, at_most(2))
    t = build_translation(f, basis).matrix
    for label in momentum_values(f):
        vecs = build_momentum_vectors(f, label, basis)
        eig = label.translation_eigenvalue
        assert abs(abs(eig) - 1.0) < 1e-14
        for v in vecs:
            assert np.isclose(np.linalg.norm(v), 1.0)
            assert np.max(np.abs(t @ v - eig * v)) < 1e-12


def test_momentum_vector_phases_follow_the_orbit_sum():
    # psi_1(k) carries e^{ik(j-1)} on the j-th translate of (1, 0, 0)
    f = 3
    basis = enumerate_basis(f, at_most(2))
    label = MomentumLabel(f=f, nu=1)
    psi1 = build_momentum_vectors(f, label, basis)[0]
    w = cmath.exp(1j * label.k)
    expected = np.zeros(basis.size, dtype=complex)
    expected[basis.index[(1, 0, 0)]] = 1 / math.sqrt(3)
    expected[basis.index[(0, 1, 0)]] = w / math.sqrt(3)
    expected[basis.index[(0, 0, 1)]] = w * w / math.sqrt(3)
    assert np.max(np.abs(psi1 - expected)) < 1e-14


# ------------------------------------------------------------- blocks

def test_single_site_block_matrix():
    gamma, lam = 3.0, 0.5
    block = block_map(1, gamma, lam)[0]
    expected = np.array([
        [0.0, -2 * lam, 0.0],
        [-2 * lam, -2.0, -SQRT2 * lam],
        [0.0, -SQRT2 * lam, -gamma - 4.0],
    ])
    assert np.max(np.abs(block.hmatrix - expected)) < 1e-12


def test_project_block_rejects_non_orthonormal_vectors():
    f = 2
    basis = enumerate_basis(f, at_most(2))
    h = build_hamiltonian(f, 3.0, 0.2, basis)
    label = momentum_values(f)[1]
    vecs = build_momentum_vectors(f, label, basis)
    vecs[0] = vecs[0] + vecs[1]  # breaks orthonormality
    with pytest.raises(ValueError):
        project_block(h, vecs, label)


@pytest.mark.parametrize("f", range(1, 9))
def test_one_quantum_diagonal_is_minus_two_cos_k(f):
    blocks = assemble_h_r(f, 3.0, 0.3)
    for b in blocks:
        i = 1 if b.label.nu == 0 else 0
        assert np.isclose(b.hmatrix[i, i].real, -2 * math.cos(b.label.k), atol=1e-12)
        assert abs(b.hmatrix[i, i].imag) < 1e-14


@pytest.mark.parametrize("f", range(1, 9))
@pytest.mark.parametrize("lam", [0.0, 0.5])
def test_vacuum_coupling_strength(f, lam):
    blocks = block_map(f, 3.0, lam)
    zero = blocks[0]
    assert np.isclose(zero.hmatrix[0, 1], -2 * lam * math.sqrt(f), atol=1e-12)
    assert np.max(np.abs(zero.hmatrix[0, 2:])) < 1e-12  # vacuum couples to psi_1 only


# ------------------------------------------------- closed-form cross-checks

def test_closed_form_h22_small_rings():
    assert np.allclose(closed_form_h22(1, 3.0, MomentumLabel(1, 0)), [[-7.0]])
    assert np.allclose(closed_form_h22(2, 3.0, MomentumLabel(2, 0)),
                       [[-3.0, -4.0], [-4.0, 0.0]])
    assert np.allclose(closed_form_h22(2, 3.0, MomentumLabel(2, 1)), [[-3.0]])


def test_closed_form_h22_three_sites():
    label = MomentumLabel(3, 1)
    q = 1 + cmath.exp(2j * math.pi / 3)
    p = cmath.exp(4j * math.pi / 3) + cmath.exp(2j * math.pi / 3)
    out = closed_form_h22(3, 3.0, label)
    expected = np.array([[-3.0, -SQRT2 * q.conjugate()], [-SQRT2 * q, -p]])
    assert np.max(np.abs(out - expected)) < 1e-14


@pytest.mark.parametrize("f", range(1, 6))
@pytest.mark.parametrize("gamma", [1.0, 3.0])
def test_closed_forms_match_projected_blocks(f, gamma):
    lam = 0.45
    for b in assemble_h_r(f, gamma, lam):
        i0 = 2 if b.label.nu == 0 else 1
        ref22 = closed_form_h22(f, gamma, b.label)
        # eigenvalue agreement (the contract) and entrywise agreement (stronger)
        assert np.max(np.abs(np.sort(np.linalg.eigvalsh(b.hmatrix[i0:, i0:]))
                             - np.sort(np.linalg.eigvalsh(ref22)))) < 1e-9
        assert np.max(np.abs(b.hmatrix[i0:, i0:] - ref22)) < 1e-12
        ref12 = closed_form_h12(f, lam, b.label)
        assert np.max(np.abs(b.hmatrix[i0 - 1, i0:] - ref12)) < 1e-12


# ------------------------------------------------------------- assembly

def test_assembled_dimensions_examples():
    assert sorted(b.dim for b in assemble_h_r(3, 3.0, 0.1)) == [3, 3, 4]
    assert sorted(b.dim for b in assemble_h_r(4, 3.0, 0.1)) == [3, 3, 4, 5]
    dims7 = sorted(b.dim for b in assemble_h_r(7, 3.0, 0.1))
    assert dims7 == [5, 5, 5, 5, 5, 5, 6]
    assert sum(dims7) == 36


@pytest.mark.parametrize("f", range(1, 13))
def test_block_dimension_identity(f):
    dims = block_dimensions(f)
    total = (f + 1) * (f + 2) // 2
    assert sum(dims) == total
    if f % 2 == 1:
        assert (f + 5) // 2 + (f - 1) * ((f + 3) // 2) == total
        assert sorted(dims, reverse=True)[0] == (f + 5) // 2
    else:
        assert ((f + 6) // 2 + (f // 2) * ((f + 2) // 2)
                + ((f - 2) // 2) * ((f + 4) // 2)) == total


@pytest.mark.parametrize("f", range(1, 9))
def test_constructed_blocks_have_expected_dimensions(f):
    for b in assemble_h_r(f, 3.0, 0.2):
        assert b.dim == expected_block_dimension(f, b.label.nu)


@pytest.mark.parametrize("f", range(1, 8))
def test_block_union_matches_brute_force_spectrum(f):
    basis = enumerate_basis(f, at_most(2))
    h = build_hamiltonian(f, 3.0, 0.5, basis)
    blocks = assemble_h_r(f, 3.0, 0.5, basis)
    union = np.sort(np.concatenate([np.linalg.eigvalsh(b.hmatrix) for b in blocks]))
    full = np.sort(np.linalg.eigvalsh(h.matrix))
    assert np.max(np.abs(union - full)) < 1e-9


@pytest.mark.parametrize("f", range(1, 7))
def test_no_matrix_elements_between_blocks(f):
    basis = enumerate_basis(f, at_most(2))
    h = build_hamiltonian(f, 3.0, 0.5, basis)
    blocks = assemble_h_r(f, 3.0, 0.5, basis)
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1:]:
            cross = bi.vectors.conj().T @ h.matrix @ bj.vectors
            assert np.max(np.abs(cross)) < 1e-12


def test_blocks_are_hermitian():
    for b in assemble_h_r(6, 3.0, 0.4):
        assert b.hermiticity_defect() < 1e-12


@pytest.mark.parametrize("f", range(1, 10))
def test_distinct_momenta_have_distinct_translation_eigenvalues(f):
    eigs = [l.translation_eigenvalue for l in momentum_values(f)]
    for i, a in enumerate(eigs):
        for b in eigs[i + 1:]:
            assert abs(a - b) > 1e-9

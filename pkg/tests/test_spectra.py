import math

import numpy as np
import pytest

from qeslattice.fock import at_most, enumerate_basis, exactly
from qeslattice.momentum import MomentumBlock, MomentumLabel, assemble_h_r, momentum_values
from qeslattice.ops import build_h_bh, build_hamiltonian
from qeslattice.reference import (CHARPOLY_SAMPLES, REFERENCE_CHAR_POLYS,
                                  REFERENCE_TABLES, f3_dim3_energies)
from qeslattice.spectra import (brute_force_eigenvalues, char_poly, diagonalize,
                                parity_reflected_spectrum, quanta_tag, solve_spectrum,
                                soliton_band, sweep, verify_eigenvector_formulas)

TABLE_TOL = 1.5e-3


def blocks_by_nu(f, gamma, lam):
    return {b.label.nu: b for b in assemble_h_r(f, gamma, lam)}


# ---------------------------------------------------------- diagonalize

def test_single_site_table_row():
    w, _ = diagonalize(blocks_by_nu(1, 3.0, 0.5)[0])
    assert np.allclose(w, [-7.101, -2.323, 0.424], atol=TABLE_TOL)


def test_three_site_side_blocks_at_zero_coupling():
    for nu in (1, -1):
        w, _ = diagonalize(blocks_by_nu(3, 3.0, 0.0)[nu])
        assert np.allclose(w, [-3.450, 1.000, 1.450], atol=TABLE_TOL)


def test_two_site_antiperiodic_block():
    w, _ = diagonalize(blocks_by_nu(2, 3.0, 0.3)[1])
    assert np.allclose(w, [-3.036, 2.036], atol=TABLE_TOL)


def test_diagonalize_rejects_non_hermitian():
    basis = enumerate_basis(1, at_most(2))
    bad = MomentumBlock(label=MomentumLabel(1, 0), basis=basis,
                        vectors=np.eye(3, dtype=complex),
                        hmatrix=np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0.0]],
                                         dtype=complex))
    with pytest.raises(ValueError):
        diagonalize(bad)


def test_eigenvectors_are_orthonormal_and_satisfy_residual():
    result = solve_spectrum(5, 3.0, 0.5)
    h = build_hamiltonian(5, 3.0, 0.5, result.basis).matrix
    for bs in result.blocks:
        v = bs.eigenvectors
        assert np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1]))) < 1e-12
        for i, e in enumerate(bs.eigenvalues):
            assert np.linalg.norm(h @ v[:, i] - e * v[:, i]) < 1e-9


# ---------------------------------------------------------- char_poly

def test_char_poly_is_monic_real_and_degree_matches():
    block = blocks_by_nu(4, 3.0, 0.3)[0]
    coeffs = char_poly(block)
    assert coeffs.dtype.kind == "f"
    assert coeffs[0] == 1.0
    assert coeffs.size == block.dim + 1


@pytest.mark.parametrize("ref", REFERENCE_CHAR_POLYS, ids=lambda r: r.name)
def test_reference_polynomials(ref):
    gammas, lams = CHARPOLY_SAMPLES
    for gamma in gammas:
        for lam in lams:
            blocks = blocks_by_nu(ref.f, gamma, lam)
            for nu in ref.nus:
                computed = char_poly(blocks[nu])
                target = ref.coefficients(gamma, lam)
                dev = np.max(np.abs(computed - target) / np.maximum(1.0, np.abs(target)))
                assert dev < 1e-8, (ref.name, gamma, lam, nu)


def test_three_site_side_block_closed_form_roots():
    for lam in (0.0, 0.25, 0.5):
        target = np.array(f3_dim3_energies(lam))
        for nu in (1, -1):
            w, _ = diagonalize(blocks_by_nu(3, 3.0, lam)[nu])
            assert np.max(np.abs(w - target)) < 1e-9


# ---------------------------------------------------------- sweep

def test_sweep_shapes_and_endpoints():
    grid = [round(0.01 * i, 10) for i in range(51)]
    result = sweep(3, 3.0, grid)
    assert result.lambdas.size == 51
    assert sum(b.energies.shape[1] for b in result.blocks) == 10
    zero_block = next(b for b in result.blocks if b.label.nu == 0)
    assert np.isclose(np.min(zero_block.energies[0]), -5.372, atol=TABLE_TOL)
    side_block = next(b for b in result.blocks if b.label.nu == 1)
    assert np.isclose(np.min(side_block.energies[-1]), -3.598, atol=TABLE_TOL)


def test_sweep_tags_at_zero_coupling():
    result = sweep(3, 3.0, [0.0, 0.1, 0.2])
    tags = {}
    for b in result.blocks:
        for level, tag in enumerate(b.tags):
            tags.setdefault(tag, []).append(round(float(b.energies[0, level]), 3))
    assert tags[0] == [0.0]
    assert sorted(tags[1]) == [-2.0, 1.0, 1.0]
    assert len(tags[2]) == 6  # the full two-quanta sector
    assert min(tags[2]) == -5.372


def test_sweep_curves_are_continuous():
    result = sweep(4, 3.0, [round(0.02 * i, 10) for i in range(26)])
    assert float(np.max(result.continuity_ratios())) < 10.0


def test_sweep_rejects_bad_grids():
    with pytest.raises(ValueError):
        sweep(2, 3.0, [])
    with pytest.raises(ValueError):
        sweep(2, 3.0, [0.2, 0.1])


def test_four_site_zero_block_table_row():
    result = sweep(4, 3.0, [0.0, 0.25, 0.5])
    zero_block = next(b for b in result.blocks if b.label.nu == 0)
    assert np.allclose(np.sort(zero_block.energies[-1]),
                       [-5.778, -2.814, -1.257, 1.338, 3.511], atol=TABLE_TOL)


def test_single_site_sweep_reproduces_whole_table():
    table = next(t for t in REFERENCE_TABLES if t.f == 1)
    grid = [row[0] for row in table.rows]
    result = sweep(1, 3.0, grid)
    energies = result.blocks[0].energies
    for i, (_, expected) in enumerate(table.rows):
        assert np.allclose(np.sort(energies[i]), expected, atol=TABLE_TOL)


# ---------------------------------------------------------- soliton band

def test_soliton_band_three_sites_at_zero_coupling():
    band = soliton_band(solve_spectrum(3, 3.0, 0.0))
    assert dict(band.minima)[0] == pytest.approx(-5.372, abs=TABLE_TOL)
    assert dict(band.minima)[1] == pytest.approx(-3.450, abs=TABLE_TOL)
    assert band.margin == pytest.approx(1.450, abs=TABLE_TOL)
    assert band.separated


def test_soliton_band_three_sites_at_half_coupling():
    band = soliton_band(solve_spectrum(3, 3.0, 0.5))
    assert sorted(e for _, e in band.minima)[0] == pytest.approx(-5.801, abs=TABLE_TOL)
    assert band.margin == pytest.approx(0.949, abs=TABLE_TOL)


def test_soliton_band_single_site_margin_is_spectral_gap():
    result = solve_spectrum(1, 3.0, 0.3)
    band = soliton_band(result)
    w = result.all_eigenvalues()
    assert band.margin == pytest.approx(w[1] - w[0])
    assert band.per_nu_margin == pytest.approx(w[1] - w[0])


@pytest.mark.parametrize("f", [3, 5, 7])
def test_per_momentum_band_separation(f):
    for lam in (0.0, 0.25, 0.5):
        band = soliton_band(solve_spectrum(f, 3.0, lam))
        assert band.per_nu_margin > 0.0


# ---------------------------------------------------------- symmetries

@pytest.mark.parametrize("f", [1, 2, 3, 4, 5])
def test_spectrum_even_in_coupling_sign(f):
    plus = solve_spectrum(f, 3.0, 0.35).all_eigenvalues()
    minus = parity_reflected_spectrum(f, 3.0, 0.35)
    assert np.max(np.abs(plus - minus)) < 1e-9
    # the quanta parity (-1)^N conjugates H(lam) into H(-lam) exactly
    basis = enumerate_basis(f, at_most(2))
    parity = np.diag([(-1.0) ** sum(s) for s in basis.states])
    h_plus = build_hamiltonian(f, 3.0, 0.35, basis).matrix
    h_minus = build_hamiltonian(f, 3.0, -0.35, basis).matrix
    assert np.max(np.abs(parity @ h_plus @ parity - h_minus)) < 1e-12


@pytest.mark.parametrize("f", range(1, 8))
@pytest.mark.parametrize("gamma", [1.0, 3.0])
@pytest.mark.parametrize("lam", [0.0, 0.25, 0.5])
def test_block_spectra_match_brute_force(f, gamma, lam):
    blocks = solve_spectrum(f, gamma, lam).all_eigenvalues()
    assert np.max(np.abs(blocks - brute_force_eigenvalues(f, gamma, lam))) < 1e-9


@pytest.mark.parametrize("f", range(1, 8))
def test_zero_coupling_sector_decomposition(f):
    gamma = 3.0
    expected = [0.0]
    expected += [-2.0 * math.cos(l.k) for l in momentum_values(f)]
    two = enumerate_basis(f, exactly(2))
    expected += list(np.linalg.eigvalsh(build_h_bh(f, gamma, two).matrix))
    computed = solve_spectrum(f, gamma, 0.0).all_eigenvalues()
    assert np.max(np.abs(computed - np.sort(expected))) < 1e-9


@pytest.mark.parametrize("f", [3, 4, 5, 7])
def test_mirror_momentum_degeneracy_and_conjugation(f):
    result = solve_spectrum(f, 3.0, 0.5)
    h = build_hamiltonian(f, 3.0, 0.5, result.basis).matrix
    present = {b.label.nu for b in result.blocks}
    for bs in result.blocks:
        if bs.label.nu <= 0 or -bs.label.nu not in present:
            continue
        mirror = result.block_for(-bs.label.nu)
        assert np.max(np.abs(bs.eigenvalues - mirror.eigenvalues)) < 1e-9
        frame = mirror.block.vectors
        for i, e in enumerate(bs.eigenvalues):
            v = bs.eigenvectors[:, i].conj()
            assert np.linalg.norm(h @ v - e * v) < 1e-8
            assert np.linalg.norm(frame @ (frame.conj().T @ v) - v) < 1e-8


# ------------------------------------------------- eigenstate formulas

@pytest.mark.parametrize("f", [1, 2, 3, 4])
def test_eigenvector_formulas_all_pass(f):
    checks = verify_eigenvector_formulas(f, 3.0, 0.25)
    hard_failures = [c for c in checks if c.status == "fail"]
    assert not hard_failures, hard_failures
    groups = [c for c in checks if c.name.startswith("reading group")]
    for g in groups:
        assert g.status == "pass"


def test_eigenvector_formulas_generic_gamma():
    for gamma in (1.0, 7.0):
        checks = verify_eigenvector_formulas(2, gamma, 0.4)
        assert all(c.passed for c in checks)


def test_eigenvector_formulas_decoupled_limit():
    checks = verify_eigenvector_formulas(2, 3.0, 0.0)
    names = {c.name for c in checks}
    assert "f2 lam=0 two-quanta symmetric pair" in names
    assert all(c.passed for c in checks)


def test_eigenvector_formulas_reject_large_rings():
    with pytest.raises(ValueError):
        verify_eigenvector_formulas(5, 3.0, 0.1)


def test_exactly_one_reading_matches_each_ambiguous_formula():
    checks = verify_eigenvector_formulas(2, 3.0, 0.3)
    members = [c for c in checks if c.params.get("nu") == 0 and "[c3" in c.name]
    assert sum(c.status == "pass" for c in members) == 1
    checks = verify_eigenvector_formulas(4, 3.0, 0.3)
    members = [c for c in checks if "pair coefficient" in c.name]
    assert {c.name.split("[")[1].rstrip("]"): c.status for c in members} == {
        "pair coefficient as printed": "reading-mismatch",
        "pair coefficient sign-flipped": "pass",
    }


def test_four_site_null_energy_eigenstate_is_exact():
    # the (1,1,0,0)-family vector at k = pi is an exact null eigenvector
    result = solve_spectrum(4, 3.0, 0.5)
    h = build_hamiltonian(4, 3.0, 0.5, result.basis).matrix
    block = result.block_for(2)
    psi22 = block.block.vectors[:, 2]
    assert np.linalg.norm(h @ psi22) < 1e-9


# ---------------------------------------------------------- tags

def test_quanta_tag_reads_dominant_sector():
    basis = enumerate_basis(2, at_most(2))
    v = np.zeros(basis.size, dtype=complex)
    v[basis.index[(1, 1)]] = 1.0
    assert quanta_tag(v, basis) == 2
    v[basis.index[(0, 0)]] = 2.0
    assert quanta_tag(v, basis) == 0


@pytest.mark.parametrize("table", REFERENCE_TABLES, ids=lambda t: t.name)
def test_reference_tables(table):
    for lam, energies in table.rows:
        result = solve_spectrum(table.f, 3.0, lam)
        for nu in table.nus:
            computed = result.block_for(nu).eigenvalues
            assert np.max(np.abs(computed - np.array(energies))) < TABLE_TOL

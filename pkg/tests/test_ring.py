"""Ring Hamiltonians, analytic modes, SALCs and degeneracy structure."""

import io

import numpy as np
import pytest

from primering.arithmetic import factorize
from primering.groups import ExtendedGroupSpec
from primering.ring import (
    RingSpec,
    analytic_modes,
    build_ring_hamiltonian,
    degeneracy_pattern,
    salc,
    salc_coset_equality,
    salc_via_primes,
    write_modes_csv,
    write_salc_csv,
)


def test_ring_spec_validation():
    with pytest.raises(ValueError):
        RingSpec(n_sites=1)
    with pytest.raises(ValueError):
        RingSpec(n_sites=4, hopping=0.0)


def test_two_site_hamiltonian_single_coupling():
    h = build_ring_hamiltonian(RingSpec(n_sites=2, onsite=0.5, hopping=-1.0))
    assert np.allclose(h, [[0.5, -1.0], [-1.0, 0.5]])


def test_hamiltonian_structure():
    h = build_ring_hamiltonian(RingSpec(n_sites=5, onsite=0.25, hopping=-2.0))
    assert np.allclose(np.diag(h), 0.25)
    for i in range(5):
        assert h[i, (i + 1) % 5] == -2.0
        assert h[i, (i + 2) % 5] == 0.0
    assert np.allclose(h, h.T)


def test_known_spectra():
    e3 = np.linalg.eigvalsh(build_ring_hamiltonian(RingSpec(3)))
    assert np.allclose(np.sort(e3), [-2.0, 1.0, 1.0], atol=1e-8)
    e6 = np.linalg.eigvalsh(build_ring_hamiltonian(RingSpec(6)))
    assert np.allclose(np.sort(e6), [-2, -1, -1, 1, 1, 2], atol=1e-8)


def test_analytic_energies_match_diagonalization():
    for n in range(2, 31):
        spec = RingSpec(n_sites=n, onsite=0.3, hopping=-1.7)
        numeric = np.sort(np.linalg.eigvalsh(build_ring_hamiltonian(spec)))
        analytic = np.sort([m.energy for m in analytic_modes(spec)])
        assert np.abs(numeric - analytic).max() < 1e-8


def test_analytic_mode_shapes():
    spec = RingSpec(6)
    modes = analytic_modes(spec)
    assert np.allclose(modes[0].orbital.coefficients, np.full(6, 1 / np.sqrt(6)))
    assert modes[0].energy == pytest.approx(-2.0)
    alt = np.array([1, -1, 1, -1, 1, -1]) / np.sqrt(6)
    assert np.abs(modes[3].orbital.coefficients - alt).max() < 1e-12
    assert modes[3].energy == pytest.approx(2.0)
    assert modes[1].energy == pytest.approx(modes[5].energy)


def test_analytic_modes_are_eigenvectors():
    for n in (3, 6, 15):
        spec = RingSpec(n)
        h = build_ring_hamiltonian(spec)
        for mode in analytic_modes(spec):
            v = mode.orbital.coefficients
            assert np.abs(h @ v - mode.energy * v).max() < 1e-10


def test_degenerate_subspace_projectors():
    for n in (3, 6, 15):
        spec = RingSpec(n)
        h = build_ring_hamiltonian(spec)
        vals, vecs = np.linalg.eigh(h)
        modes = analytic_modes(spec)
        for cls in degeneracy_pattern(n):
            energy = modes[cls[0]].energy
            cols = vecs[:, np.abs(vals - energy) < 1e-8]
            assert cols.shape[1] == len(cls)
            numeric = cols @ cols.conj().T
            analytic = sum(
                np.outer(
                    modes[j].orbital.coefficients,
                    modes[j].orbital.coefficients.conj(),
                )
                for j in cls
            )
            assert np.abs(numeric - analytic).max() < 1e-8


def test_degeneracy_pattern():
    assert degeneracy_pattern(6) == [(0,), (1, 5), (2, 4), (3,)]
    assert degeneracy_pattern(2) == [(0,), (1,)]
    assert degeneracy_pattern(5) == [(0,), (1, 4), (2, 3)]
    p15 = degeneracy_pattern(15)
    assert p15[0] == (0,) and p15[1] == (1, 14) and p15[-1] == (7, 8)
    with pytest.raises(ValueError):
        degeneracy_pattern(1)


def test_salc_uniform_combination():
    ao = np.zeros(6, dtype=np.complex128)
    ao[0] = 1.0
    vec = salc(0, ao)
    assert not vec.is_zero
    assert vec.norm == pytest.approx(1 / np.sqrt(6))
    assert np.abs(vec.coefficients - 1 / np.sqrt(6)).max() < 1e-12


def test_salc_zero_profile_flagged():
    vec = salc(2, np.zeros(6, dtype=np.complex128))
    assert vec.is_zero
    assert vec.norm == 0.0
    assert np.all(vec.coefficients == 0)


def test_salc_absent_label_flagged():
    # invariance under a two-slice shift restricts labels to 2j = 0 mod 6
    ao = np.array([1.0, 0.0, 1.0, 0.0, 1.0, 0.0], dtype=np.complex128)
    for j in (1, 2, 4, 5):
        assert salc(j, ao).is_zero
    assert not salc(0, ao).is_zero
    assert not salc(3, ao).is_zero


def test_salc_conjugate_pairing():
    rng = np.random.default_rng(9)
    for n in (6, 15):
        ao = rng.standard_normal(n).astype(np.complex128)
        for j in range(1, n):
            a, b = salc(j, ao), salc(n - j, ao)
            if a.is_zero:
                assert b.is_zero
                continue
            assert np.abs(a.coefficients - b.coefficients.conj()).max() < 1e-10


def test_salc_via_primes_equivalence():
    rng = np.random.default_rng(10)
    for n in (6, 15):
        fact = factorize(n)
        ao = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        for j in range(n):
            direct = salc(j, ao)
            viaprimes = salc_via_primes(j, ao, fact)
            assert direct.norm == pytest.approx(viaprimes.norm, abs=1e-10)
            assert np.abs(direct.coefficients - viaprimes.coefficients).max() < 1e-10


def test_salc_via_primes_rejects_square_factor():
    with pytest.raises(ValueError):
        salc_via_primes(0, np.ones(12, dtype=np.complex128), factorize(12))


def test_salc_coset_equality():
    spec = ExtendedGroupSpec.of(15, 2)
    assert salc_coset_equality(15, spec, 0, 2)
    assert salc_coset_equality(7, spec, 4, 4)
    assert not salc_coset_equality(1, spec, 0, 1)
    # label 15 in the order-30 ring has phase period 2
    for x1 in range(30):
        for x2 in range(30):
            expect = (x1 - x2) % 2 == 0
            assert salc_coset_equality(15, spec, x1, x2) == expect
    with pytest.raises(ValueError):
        salc_coset_equality(1, spec, 30, 0)


def test_modes_csv():
    buf = io.StringIO()
    write_modes_csv(buf, RingSpec(6))
    lines = buf.getvalue().split("\n")
    assert lines[0] == "j,energy,site,re,im"
    assert lines[1] == "0,-2,0,0.408248290463863,0"
    assert len(lines) == 38 and lines[-1] == ""


def test_salc_csv():
    ao = np.zeros(6, dtype=np.complex128)
    ao[0] = 1.0
    buf = io.StringIO()
    write_salc_csv(buf, 6, ao, labels=[0, 3])
    lines = buf.getvalue().rstrip("\n").split("\n")
    assert lines[0] == "j,site,re,im"
    assert len(lines) == 13
    first = lines[1].split(",")
    assert first[0] == "0" and float(first[2]) == pytest.approx(1 / np.sqrt(6))

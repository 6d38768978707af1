"""Irrep values, character tables, projections and translation phases."""

import numpy as np
import pytest

from primering.arithmetic import factorize
from primering.groups import CyclicGroup
from primering.representations import (
    character_table,
    irrep_value,
    project,
    project_via_primes,
    shift,
    translation_phase_check,
    verify_great_orthogonality,
)


def noise(rng, m):
    return rng.standard_normal(m) + 1j * rng.standard_normal(m)


def test_irrep_value_known():
    assert irrep_value(3, 2, 6) == pytest.approx(1.0)
    assert irrep_value(1, 1, 2) == pytest.approx(-1.0)
    assert irrep_value(0, 4, 9) == pytest.approx(1.0)
    assert irrep_value(1, 3, 6) == pytest.approx(-1.0)


def test_irrep_value_periodic_in_rotation_index():
    for j, k, m in [(2, 5, 6), (7, 11, 15), (1, 1, 3)]:
        assert irrep_value(j, k + m, m) == pytest.approx(irrep_value(j, k, m))


def test_irrep_value_validation():
    with pytest.raises(ValueError):
        irrep_value(6, 0, 6)
    with pytest.raises(ValueError):
        irrep_value(-1, 0, 6)
    with pytest.raises(ValueError):
        irrep_value(0, 0, 0)


def test_character_table_unitary():
    for m in (1, 2, 6, 15, 30):
        t = character_table(m)
        gram = t.conj() @ t.T / m
        assert np.abs(gram - np.eye(m)).max() < 1e-12
        assert np.abs(t[0] - 1).max() == 0.0
        assert np.abs(t[:, 0] - 1).max() == 0.0


def test_great_orthogonality_reports():
    rep = verify_great_orthogonality(6)
    assert rep.passed and rep.max_deviation < 1e-12
    rep30 = verify_great_orthogonality(30)
    assert rep30.passed and rep30.max_deviation < 1e-10
    assert verify_great_orthogonality(1).passed
    # unreachable tolerance flips the verdict without changing the deviation
    assert not verify_great_orthogonality(6, tol=-1.0).passed


def test_shift_moves_impulse():
    g6 = CyclicGroup(6)
    f = np.zeros(6, dtype=np.complex128)
    f[0] = 1.0
    assert np.argmax(np.abs(shift(f, g6.element(2)))) == 2
    assert np.allclose(shift(f, g6.identity), f)
    with pytest.raises(ValueError):
        shift(f, CyclicGroup(5).element(1))


def test_shift_composes():
    rng = np.random.default_rng(0)
    g15 = CyclicGroup(15)
    f = noise(rng, 15)
    a, b = g15.element(4), g15.element(9)
    assert np.allclose(shift(shift(f, a), b), shift(f, a.compose(b)))


def test_project_two_site_closed_form():
    rng = np.random.default_rng(1)
    f = noise(rng, 2)
    assert np.abs(project(0, f) - (f + np.roll(f, 1)) / 2).max() < 1e-15
    assert np.abs(project(1, f) - (f - np.roll(f, 1)) / 2).max() < 1e-15


def test_projector_algebra():
    rng = np.random.default_rng(2)
    for m in (6, 15):
        for _ in range(5):
            f = noise(rng, m)
            parts = [project(j, f) for j in range(m)]
            assert np.abs(sum(parts) - f).max() < 1e-10
            for j in range(m):
                assert np.abs(project(j, parts[j]) - parts[j]).max() < 1e-10
                for jp in range(m):
                    if jp != j:
                        assert np.abs(project(j, parts[jp])).max() < 1e-10


def test_project_via_primes_equals_direct():
    rng = np.random.default_rng(5)
    for m in (2, 6, 15, 21, 30):
        fact = factorize(m)
        for _ in range(10):
            f = noise(rng, m)
            for j in range(m):
                gap = np.abs(project_via_primes(j, f, fact) - project(j, f)).max()
                assert gap < 1e-10


def test_project_via_primes_validation():
    f = np.ones(12, dtype=np.complex128)
    with pytest.raises(ValueError):
        project_via_primes(0, f, factorize(12))
    with pytest.raises(ValueError):
        project_via_primes(0, np.ones(6), factorize(15))
    with pytest.raises(ValueError):
        project_via_primes(6, np.ones(6), factorize(6))


def test_translation_phase_random_functions():
    rng = np.random.default_rng(6)
    f = noise(rng, 15)
    for j in range(15):
        rep = translation_phase_check(j, f)
        assert rep.passed and rep.max_deviation < 1e-12


def test_translation_phase_impulse_example():
    f = np.zeros(6, dtype=np.complex128)
    f[0] = 1.0
    p = project(2, f)
    phase = np.exp(2j * np.pi / 3)
    assert np.abs(np.roll(p, -1) - phase * p).max() < 1e-12


def test_full_cycle_of_steps_restores_function():
    # stepping M times multiplies by exp(i*2*pi*j), the identity
    rng = np.random.default_rng(7)
    for m in (6, 15):
        f = noise(rng, m)
        for j in range(m):
            p = project(j, f)
            phase = np.exp(2j * np.pi * j / m)
            for s in range(m + 1):
                assert np.abs(np.roll(p, -s) - phase**s * p).max() < 1e-11

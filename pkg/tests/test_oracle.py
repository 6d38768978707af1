"""Modular-power oracle: coset labels, periods and residue spectra."""

import io
import math

import numpy as np
import pytest

from primering.arithmetic import IntegerOverflowError, multiplicative_order
from primering.groups import ExtendedGroupSpec
from primering.oracle import (
    CosetLabel,
    oracle_eval,
    residue_sequence,
    residue_spectrum,
    verify_period_subgroup,
    write_spectrum_csv,
)

S15 = ExtendedGroupSpec.of(15, 2)
S21 = ExtendedGroupSpec.of(21, 10)

# full label tables; 2**8 = 256 = 17*15 + 1 fixes alpha = 17 at x = 8
TABLE_15_2 = [
    (0, 1), (0, 2), (0, 4), (0, 8), (1, 1), (2, 2), (4, 4), (8, 8), (17, 1),
]
TABLE_21_10 = [
    (0, 1), (0, 10), (4, 16), (47, 13), (476, 4), (4761, 19),
    (47619, 1), (476190, 10), (4761904, 16), (47619047, 13),
    (476190476, 4), (4761904761, 19), (47619047619, 1), (476190476190, 10),
]


def test_oracle_eval_table_15_2():
    for x, (alpha, beta) in enumerate(TABLE_15_2):
        assert oracle_eval(S15, x) == CosetLabel(alpha, beta)


def test_oracle_eval_table_21_10():
    for x, (alpha, beta) in enumerate(TABLE_21_10):
        assert oracle_eval(S21, x) == CosetLabel(alpha, beta)


def test_oracle_eval_reconstructs_power():
    for spec in (S15, S21, ExtendedGroupSpec.of(6, 5)):
        for x in range(0, 40):
            try:
                label = oracle_eval(spec, x)
            except IntegerOverflowError:
                break
            assert label.alpha * spec.n + label.beta == spec.a**x
            assert 0 <= label.beta < spec.n


def test_oracle_eval_overflow():
    with pytest.raises(IntegerOverflowError):
        oracle_eval(S21, 40)
    with pytest.raises(ValueError):
        oracle_eval(S15, -1)


def test_residue_sequence_known():
    assert residue_sequence(S15, 8) == [1, 2, 4, 8, 1, 2, 4, 8]
    assert residue_sequence(S21, 12) == [1, 10, 16, 13, 4, 19] * 2
    assert residue_sequence(S15, 0) == []


def test_residue_sequence_unit_base():
    # a = 16 is 1 mod 15, so the whole sequence collapses
    spec = ExtendedGroupSpec.of(15, 16)
    assert residue_sequence(spec, 10) == [1] * 10


def test_residue_sequence_matches_mod_pow():
    for spec in (S15, S21):
        seq = residue_sequence(spec, 50)
        for x, w in enumerate(seq):
            assert w == pow(spec.a, x, spec.n)


def test_sequence_period_equals_order_exhaustively():
    # every coprime pair with modulus up to 100
    for n in range(2, 101):
        for a in range(2, n):
            if math.gcd(a, n) != 1:
                continue
            spec = ExtendedGroupSpec.of(n, a)
            r = multiplicative_order(a, n)
            seq = residue_sequence(spec, 2 * r)
            assert seq[r:] == seq[:r]
            periods = [
                p
                for p in range(1, r + 1)
                if all(seq[x + p] == seq[x] for x in range(r))
            ]
            assert min(periods) == r


def test_verify_period_subgroup_holds():
    rep = verify_period_subgroup(S15, window=60)
    assert rep.holds and rep.order == 4 and rep.violation is None
    rep21 = verify_period_subgroup(S21, window=60)
    assert rep21.holds and rep21.order == 6
    # default window runs 4*a*n slices
    assert verify_period_subgroup(S15).window == 120


def test_verify_period_subgroup_unit_order():
    spec = ExtendedGroupSpec.of(15, 16)
    rep = verify_period_subgroup(spec, window=10)
    assert rep.holds and rep.order == 1


def test_verify_period_subgroup_window_too_small():
    with pytest.raises(ValueError):
        verify_period_subgroup(S15, window=7)


def test_residue_spectrum_support():
    s = residue_spectrum(S15, 60, 1)
    mags = np.abs(s)
    on = {0, 15, 30, 45}
    for v in range(60):
        if v in on:
            assert mags[v] > 1.9
        else:
            assert mags[v] < 1e-10


def test_residue_spectrum_other_residue():
    s = residue_spectrum(S21, 60, 13)
    mags = np.abs(s)
    for v in range(60):
        if v % 10 == 0:
            assert mags[v] > 1.2
        else:
            assert mags[v] < 1e-10


def test_residue_spectrum_unattained_is_zero():
    s = residue_spectrum(S15, 60, 7)
    assert np.all(s == 0)


def test_residue_spectrum_parseval():
    # unitary transform of a 15-count indicator keeps its energy
    s = residue_spectrum(S15, 60, 1)
    assert float(np.abs(s) ** 2 @ np.ones(60)) == pytest.approx(15.0)


def test_residue_spectrum_validation():
    with pytest.raises(ValueError):
        residue_spectrum(S15, 60, 15)
    with pytest.raises(ValueError):
        residue_spectrum(S15, 60, -1)


def test_spectrum_csv():
    buf = io.StringIO()
    write_spectrum_csv(buf, residue_spectrum(S15, 60, 1))
    lines = buf.getvalue().rstrip("\n").split("\n")
    assert lines[0] == "index,magnitude_squared"
    assert len(lines) == 61
    assert lines[16].split(",")[1] == "3.75"

"""Modular-exponentiation oracle on the extended rotation group.

f(x) = a**x mod n, read as a function on the group of order a*n.  Each
value is reported with its exact coset label (alpha, beta) where
a**x = alpha*n + beta, 0 <= beta < n.  alpha requires the full power,
so it inherits the 128-bit contract of checked_pow; beta alone never
does (modular route).  f is constant exactly on residue classes mod r,
r the multiplicative order of a mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

import numpy as np

from . import _kernels
from .arithmetic import checked_pow, mod_pow, multiplicative_order
from .formatting import csv_text, sig15
from .groups import ExtendedGroupSpec


@dataclass(frozen=True)
class CosetLabel:
    """Quotient and remainder of a**x by n: a**x = alpha*n + beta."""

    alpha: int
    beta: int


def oracle_eval(spec: ExtendedGroupSpec, x: int) -> CosetLabel:
    """Exact oracle value at slice x.

    Computes a**x in full (raising IntegerOverflowError past 128 bits)
    and cross-checks the remainder against the independent modular
    route before returning.
    """
    if x < 0:
        raise ValueError("slice index must be non-negative")
    value = checked_pow(spec.a, x)
    alpha, beta = divmod(value, spec.n)
    if beta != mod_pow(spec.a, x, spec.n):
        raise RuntimeError("internal error: quotient and modular routes disagree")
    return CosetLabel(alpha=alpha, beta=beta)


def residue_sequence(spec: ExtendedGroupSpec, length: int) -> list[int]:
    """[a**x mod n for x in range(length)] by running multiplication."""
    if length < 0:
        raise ValueError("length must be non-negative")
    out: list[int] = []
    y = 1 % spec.n
    for _ in range(length):
        out.append(y)
        y = y * spec.a % spec.n
    return out


@dataclass(frozen=True)
class PeriodCheckReport:
    """Result of the equal-value-iff-congruent sweep."""

    order: int
    window: int
    holds: bool
    violation: tuple[int, int] | None


def verify_period_subgroup(
    spec: ExtendedGroupSpec, window: int | None = None
) -> PeriodCheckReport:
    """Check f(x1) = f(x2) iff x1 = x2 (mod r) for all pairs below window.

    window defaults to 4*a*n; it must cover at least two periods.
    """
    r = multiplicative_order(spec.a, spec.n)
    if window is None:
        window = 4 * spec.order
    if window < 2 * r:
        raise ValueError("window must cover at least two periods")
    seq = np.array(residue_sequence(spec, window), dtype=np.int64)
    idx = np.arange(window, dtype=np.int64)
    equal = seq[:, None] == seq[None, :]
    congruent = (idx[:, None] - idx[None, :]) % r == 0
    mismatch = equal != congruent
    if mismatch.any():
        x1, x2 = np.argwhere(mismatch)[0]
        return PeriodCheckReport(r, window, False, (int(x1), int(x2)))
    return PeriodCheckReport(r, window, True, None)


def residue_spectrum(
    spec: ExtendedGroupSpec, length: int, residue: int
) -> np.ndarray:
    """Unitary DFT of the indicator of {x < length : a**x mod n == residue}.

    An unattained residue gives the zero vector.  When the order r of a
    divides length, the support is exactly the multiples of length/r.
    """
    if not 0 <= residue < spec.n:
        raise ValueError("residue out of range [0, n)")
    seq = np.array(residue_sequence(spec, length), dtype=np.int64)
    positions = np.nonzero(seq == residue)[0]
    return _kernels.sparse_dft(positions, length) / np.sqrt(length)


def write_spectrum_csv(stream: IO[str], spectrum: np.ndarray) -> None:
    """Columns index, magnitude_squared."""
    rows = [
        [str(v), sig15(float(abs(z) ** 2))] for v, z in enumerate(spectrum)
    ]
    stream.write(csv_text(["index", "magnitude_squared"], rows))

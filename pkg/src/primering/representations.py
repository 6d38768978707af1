"""Scalar irreducible representations of cyclic groups.

A group of order M has M one-dimensional irreps, labeled j in [0, M),
with value exp(2*pi*i*j*k/M) on the rotation of index k.  Functions on
the group are plain complex vectors of length M; index x holds the
value on slice x.  The shift operator follows the function-moves
convention: shifting by the rotation g writes the old value at x into
x + k_g, i.e. (shift f)(x) = f(x - k_g mod M).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arithmetic import PrimeFactorization
from .groups import GroupElement


def irrep_value(j: int, k: int, order: int) -> complex:
    """Value of irrep j on the rotation of index k in a group of the given order."""
    if order < 1:
        raise ValueError("order must be positive")
    if not 0 <= j < order:
        raise ValueError("irrep label out of range [0, order)")
    return complex(np.exp(2j * np.pi * (j * (k % order) % order) / order))


def character_table(order: int) -> np.ndarray:
    """Matrix T[j, k] = exp(2*pi*i*j*k/order)."""
    if order < 1:
        raise ValueError("order must be positive")
    idx = np.arange(order, dtype=np.int64)
    return np.exp(2j * np.pi * (np.outer(idx, idx) % order) / order)


@dataclass(frozen=True)
class DeviationReport:
    """Outcome of a numerical identity check."""

    max_deviation: float
    tolerance: float
    passed: bool


def verify_great_orthogonality(order: int, tol: float = 1e-10) -> DeviationReport:
    """Check row orthogonality of the character table.

    For one-dimensional irreps the statement is
    sum_k conj(T[j, k]) * T[j', k] = order * delta(j, j'), which also
    covers the row-norm case j = j'.
    """
    table = character_table(order)
    gram = table.conj() @ table.T / order
    dev = float(np.abs(gram - np.eye(order)).max())
    return DeviationReport(max_deviation=dev, tolerance=tol, passed=dev <= tol)


def shift(f: np.ndarray, g: GroupElement) -> np.ndarray:
    """Apply the rotation g to a function on its group."""
    f = np.asarray(f, dtype=np.complex128)
    if f.shape[0] != g.group.order:
        raise ValueError("function length must equal the group order")
    return np.roll(f, g.index)


def project(j: int, f: np.ndarray) -> np.ndarray:
    """Component of f transforming as irrep j.

    Computed as (1/M) * sum_k exp(2*pi*i*j*k/M) * (f shifted by k); the
    k = 0 term is the identity term.
    """
    f = np.asarray(f, dtype=np.complex128)
    return _kernels.apply_projection(f, j)


def project_via_primes(
    j: int, f: np.ndarray, factorization: PrimeFactorization
) -> np.ndarray:
    """Same projection, built from one subgroup projector per prime factor.

    For square-free M = b_1 * ... * b_m, applies in ascending prime
    order the projector of label j mod b_i over the subgroup generated
    by the rotation of index M // b_i.  Equals project(j, f).
    """
    f = np.asarray(f, dtype=np.complex128)
    m = f.shape[0]
    if factorization.n != m:
        raise ValueError("factorization does not match the function length")
    if not factorization.is_squarefree:
        raise ValueError(f"order {m} is not square-free")
    if not 0 <= j < m:
        raise ValueError("label out of range [0, m)")
    out = f
    for b in factorization.primes:
        gen = m // b
        jb = j % b
        acc = np.zeros_like(out)
        for t in range(b):
            acc += np.exp(2j * np.pi * (jb * t % b) / b) * np.roll(out, t * gen)
        out = acc / b
    return out


def translation_phase_check(
    j: int, f: np.ndarray, tol: float = 1e-12
) -> DeviationReport:
    """Verify the one-step translation phase of a projected function.

    Advancing the argument of project(j, f) by one slice multiplies it
    by exp(2*pi*i*j/M); applying M such steps returns the original
    function, which forces the label to be an integer.
    """
    p = project(j, f)
    m = p.shape[0]
    advanced = np.roll(p, -1)
    phase = np.exp(2j * np.pi * j / m)
    dev = float(np.abs(advanced - phase * p).max())
    return DeviationReport(max_deviation=dev, tolerance=tol, passed=dev <= tol)

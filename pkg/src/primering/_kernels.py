"""Hot numeric kernels: numba-jitted loops with pure-numpy fallbacks.

The jitted path is used when numba imports cleanly and the environment
variable PRIMERING_NO_NUMBA is unset/empty; setting it to any non-empty
value forces the numpy fallbacks.  Each pair computes the same
quantity; they agree to a few ulps and both are deterministic from run
to run (no parallel reductions, no fastmath).

Integer phase arguments are reduced modulo the transform length before
hitting sin/exp, so both paths stay accurate for large indices.  The
progression kernel assumes length < 2**30 so intermediate products fit
in int64.
"""

from __future__ import annotations

import cmath
import math
import os
from functools import lru_cache

import numpy as np

_DISABLED = bool(os.environ.get("PRIMERING_NO_NUMBA"))

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _DISABLED


def progression_probabilities_numpy(step: int, count: int, m: int) -> np.ndarray:
    """Measurement probabilities after transforming an arithmetic progression.

    The register state is 1/sqrt(count) on {offset + t*step : t < count}
    inside a length-m register; outcome v then has probability
    |sum_t exp(2*pi*i*v*step*t/m)|**2 / (count*m), independent of the
    offset.  Evaluated through the closed-form geometric sum, never by
    summing the support.
    """
    v = np.arange(m, dtype=np.int64)
    den = v * step % m
    num = den * count % m
    # |sin(pi*x/m)| is m-periodic and symmetric about m/2; folding the
    # integer arguments below m/2 keeps full relative precision (sin of
    # a value near pi would lose the digits the norm check needs)
    den_f = np.minimum(den, m - den)
    num_f = np.minimum(num, m - num)
    old = np.seterr(divide="ignore", invalid="ignore")
    try:
        mag = np.sin(np.pi * num_f / m) / np.sin(np.pi * den_f / m)
    finally:
        np.seterr(**old)
    mag = np.where(den == 0, float(count), mag)
    mag = np.where((den != 0) & (num == 0), 0.0, mag)
    return mag * mag / (count * m)


def sparse_dft_numpy(positions: np.ndarray, length: int) -> np.ndarray:
    """Unnormalized DFT sum_x exp(2*pi*i*v*x/length) over the given support."""
    if positions.size == 0:
        return np.zeros(length, dtype=np.complex128)
    v = np.arange(length, dtype=np.int64)[:, None]
    phase = v * positions[None, :] % length
    return np.exp(2j * np.pi * phase / length).sum(axis=1)


@lru_cache(maxsize=64)
def _gather_index(m: int) -> np.ndarray:
    x = np.arange(m)
    return (x[:, None] - x[None, :]) % m


def apply_projection_numpy(f: np.ndarray, j: int) -> np.ndarray:
    """(1/m) * sum_k exp(2*pi*i*j*k/m) * (f shifted by k)."""
    m = f.shape[0]
    chi = np.exp(2j * np.pi * (j * np.arange(m) % m) / m)
    return f[_gather_index(m)] @ chi / m


if HAS_NUMBA:

    @njit(cache=True)
    def _progression_probabilities_jit(step, count, m):  # pragma: no cover
        out = np.empty(m, dtype=np.float64)
        for v in range(m):
            den = v * step % m
            num = den * count % m
            if den == 0:
                mag = float(count)
            elif num == 0:
                mag = 0.0
            else:
                # fold below m/2 for full relative precision near pi
                den_f = den if 2 * den <= m else m - den
                num_f = num if 2 * num <= m else m - num
                mag = math.sin(math.pi * num_f / m) / math.sin(
                    math.pi * den_f / m
                )
            out[v] = mag * mag / (count * m)
        return out

    @njit(cache=True)
    def _sparse_dft_jit(positions, length):  # pragma: no cover
        out = np.zeros(length, dtype=np.complex128)
        for v in range(length):
            acc = 0.0 + 0.0j
            for i in range(positions.shape[0]):
                phase = v * positions[i] % length
                acc += cmath.exp(2j * math.pi * phase / length)
            out[v] = acc
        return out

    @njit(cache=True)
    def _apply_projection_jit(f, j):  # pragma: no cover
        m = f.shape[0]
        out = np.zeros(m, dtype=np.complex128)
        for k in range(m):
            chi = cmath.exp(2j * math.pi * (j * k % m) / m)
            for x in range(m):
                out[x] += chi * f[(x - k) % m]
        for x in range(m):
            out[x] /= m
        return out


def progression_probabilities(step: int, count: int, m: int) -> np.ndarray:
    if step < 1 or count < 1 or m < 1:
        raise ValueError("step, count and m must be positive")
    if m >= 1 << 30:
        raise ValueError("register length too large for int64 phase arithmetic")
    if USE_NUMBA:
        return _progression_probabilities_jit(step, count, m)
    return progression_probabilities_numpy(step, count, m)


def sparse_dft(positions: np.ndarray, length: int) -> np.ndarray:
    if length < 1:
        raise ValueError("transform length must be positive")
    positions = np.ascontiguousarray(positions, dtype=np.int64)
    if USE_NUMBA:
        return _sparse_dft_jit(positions, length)
    return sparse_dft_numpy(positions, length)


def apply_projection(f: np.ndarray, j: int) -> np.ndarray:
    f = np.ascontiguousarray(f, dtype=np.complex128)
    m = f.shape[0]
    if m < 1:
        raise ValueError("function must have positive length")
    if not 0 <= j < m:
        raise ValueError("label out of range [0, m)")
    if USE_NUMBA:
        return _apply_projection_jit(f, j)
    return apply_projection_numpy(f, j)

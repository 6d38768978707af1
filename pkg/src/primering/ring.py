"""Tight-binding ring: one orbital per site, nearest-neighbor coupling.

This is the standard Hückel-type stand-in for a cyclic chain of n
repeat units: on-site energy alpha on the diagonal, hopping t (negative
by convention) between ring neighbors.  Its eigenvectors are exactly
the cyclic-symmetry modes, so the spectrum and the projected orbital
combinations can be cross-checked against closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, NamedTuple, Sequence

import numpy as np

from .arithmetic import PrimeFactorization
from .formatting import csv_text, sig15
from .groups import ExtendedGroupSpec
from .representations import project, project_via_primes

ZERO_NORM_TOL = 1e-12


@dataclass(frozen=True)
class RingSpec:
    """Ring of n_sites sites; a two-site ring keeps a single coupling t."""

    n_sites: int
    onsite: float = 0.0
    hopping: float = -1.0

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError("ring needs at least 2 sites")
        if self.hopping == 0.0:
            raise ValueError("hopping must be nonzero")


def build_ring_hamiltonian(spec: RingSpec) -> np.ndarray:
    """Real symmetric n x n matrix of the ring."""
    n = spec.n_sites
    h = np.zeros((n, n), dtype=np.float64)
    np.fill_diagonal(h, spec.onsite)
    if n == 2:
        # the doubled edge between the two sites counts once
        h[0, 1] = h[1, 0] = spec.hopping
        return h
    for i in range(n):
        h[i, (i + 1) % n] = spec.hopping
        h[(i + 1) % n, i] = spec.hopping
    return h


@dataclass(frozen=True)
class OrbitalVector:
    """Site coefficients plus the pre-normalization weight.

    coefficients are unit-norm unless the projection vanished, in which
    case they are returned raw and is_zero reports it.
    """

    coefficients: np.ndarray
    norm: float

    @property
    def is_zero(self) -> bool:
        return self.norm < ZERO_NORM_TOL


class RingMode(NamedTuple):
    j: int
    energy: float
    orbital: OrbitalVector


def analytic_modes(spec: RingSpec) -> list[RingMode]:
    """Closed-form eigenpairs: E_j = alpha + 2 t cos(2 pi j / n).

    The two-site ring uses its single-coupling convention,
    E_j = alpha + t cos(pi j).  Mode j has coefficients
    exp(2 pi i j s / n)/sqrt(n) on site s.
    """
    n = spec.n_sites
    coupling = spec.hopping if n == 2 else 2.0 * spec.hopping
    modes = []
    for j in range(n):
        energy = spec.onsite + coupling * np.cos(2.0 * np.pi * j / n)
        coeff = np.exp(2j * np.pi * (j * np.arange(n) % n) / n) / np.sqrt(n)
        modes.append(RingMode(j, float(energy), OrbitalVector(coeff, 1.0)))
    return modes


def degeneracy_pattern(n: int) -> list[tuple[int, ...]]:
    """Mode classes sharing an energy: {j, n-j} pairs, singletons 0 and n/2."""
    if n < 2:
        raise ValueError("need n >= 2")
    classes: list[tuple[int, ...]] = [(0,)]
    for j in range(1, (n + 1) // 2):
        classes.append((j, n - j))
    if n % 2 == 0:
        classes.append((n // 2,))
    return classes


def salc(j: int, ao_profile: np.ndarray) -> OrbitalVector:
    """Symmetry-adapted combination: project the profile onto irrep j.

    The result is normalized; a vanishing projection comes back raw
    with a zero norm so callers can tell the label is absent.
    """
    p = project(j, ao_profile)
    return _normalized(p)


def salc_via_primes(
    j: int, ao_profile: np.ndarray, factorization: PrimeFactorization
) -> OrbitalVector:
    """salc built through the per-prime projector factorization."""
    p = project_via_primes(j, ao_profile, factorization)
    return _normalized(p)


def _normalized(p: np.ndarray) -> OrbitalVector:
    norm = float(np.linalg.norm(p))
    if norm < ZERO_NORM_TOL:
        return OrbitalVector(coefficients=p, norm=0.0)
    return OrbitalVector(coefficients=p / norm, norm=norm)


def salc_coset_equality(
    j: int,
    spec: ExtendedGroupSpec,
    x1: int,
    x2: int,
    tol: float = 1e-12,
) -> bool:
    """Whether irrep j takes equal values on slices x1 and x2 of the big ring.

    True iff exp(2 pi i j x1 / M) = exp(2 pi i j x2 / M) with M = a*n,
    i.e. iff j*(x1 - x2) = 0 mod M.
    """
    m = spec.order
    if not (0 <= x1 < m and 0 <= x2 < m):
        raise ValueError("slice indices must lie in [0, a*n)")
    p1 = np.exp(2j * np.pi * (j * x1 % m) / m)
    p2 = np.exp(2j * np.pi * (j * x2 % m) / m)
    return bool(abs(p1 - p2) <= tol)


def write_modes_csv(stream: IO[str], spec: RingSpec) -> None:
    """Columns j, energy, site, re, im for every analytic mode."""
    rows = []
    for mode in analytic_modes(spec):
        for site, c in enumerate(mode.orbital.coefficients):
            rows.append(
                [
                    str(mode.j),
                    sig15(mode.energy),
                    str(site),
                    sig15(c.real),
                    sig15(c.imag),
                ]
            )
    stream.write(csv_text(["j", "energy", "site", "re", "im"], rows))


def write_salc_csv(
    stream: IO[str],
    n: int,
    ao_profile: np.ndarray,
    labels: Sequence[int] | None = None,
) -> None:
    """Columns j, site, re, im of the projected combinations."""
    if labels is None:
        labels = range(n)
    rows = []
    for j in labels:
        vec = salc(j, ao_profile)
        for site, c in enumerate(vec.coefficients):
            rows.append([str(j), str(site), sig15(c.real), sig15(c.imag)])
    stream.write(csv_text(["j", "site", "re", "im"], rows))

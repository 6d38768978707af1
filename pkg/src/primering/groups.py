"""Finite cyclic rotation groups and their coset/CRT structure.

A group of order M models the M-fold rotations about a fixed axis.
Elements are labeled by an index k in [0, M); index 0 is the identity
and composition adds indices mod M.  Exported tables keep that 0-based
convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arithmetic import PrimeFactorization, factorize


@dataclass(frozen=True)
class CyclicGroup:
    """Cyclic group of rotations, order >= 1."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("group order must be positive")

    def element(self, index: int) -> "GroupElement":
        return GroupElement(self, index % self.order)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, 0)

    def elements(self):
        return (GroupElement(self, k) for k in range(self.order))


@dataclass(frozen=True)
class GroupElement:
    """Rotation by index steps out of group.order."""

    group: CyclicGroup
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise ValueError("element index out of canonical range [0, order)")

    def compose(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements belong to different groups")
        return GroupElement(self.group, (self.index + other.index) % self.group.order)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, (-self.index) % self.group.order)

    def element_order(self) -> int:
        """Smallest t >= 1 with t*index = 0 mod group order."""
        return self.group.order // math.gcd(self.group.order, self.index)


def subgroup_generated(g: GroupElement) -> tuple[GroupElement, ...]:
    """Elements of <g>, indices ascending (identity first)."""
    m = g.group.order
    step = math.gcd(m, g.index)
    if g.index == 0:
        return (g.group.identity,)
    return tuple(GroupElement(g.group, k) for k in range(0, m, step))


@dataclass(frozen=True)
class Coset:
    """One coset of <generator>; members listed in generation order."""

    representative: GroupElement
    generator: GroupElement
    members: tuple[GroupElement, ...]


def coset_partition(group: CyclicGroup, generator: GroupElement) -> list[Coset]:
    """Partition of group into cosets of <generator>.

    Representatives are the smallest index of each coset and come out
    ascending; members are rep, rep*g, rep*g**2, ... with no repeats.
    """
    if generator.group != group:
        raise ValueError("generator must belong to the group")
    m = group.order
    d = math.gcd(m, generator.index)
    size = m // d
    cosets = []
    for rep in range(d):
        indices = [(rep + t * generator.index) % m for t in range(size)]
        if len(set(indices)) != size:
            raise RuntimeError("coset members repeated; generator order broken")
        # translating by the generator must permute the coset onto itself
        translated = {(i + generator.index) % m for i in indices}
        if translated != set(indices):
            raise RuntimeError("coset not closed under the generating rotation")
        cosets.append(
            Coset(
                representative=GroupElement(group, rep),
                generator=generator,
                members=tuple(GroupElement(group, i) for i in indices),
            )
        )
    return cosets


def crt_residues(g: GroupElement) -> tuple[int, ...]:
    """Residues of the element index modulo each prime power of the order."""
    m = g.group.order
    if m < 2:
        raise ValueError("residue decomposition needs order >= 2")
    fact = factorize(m)
    return tuple(g.index % (b**e) for b, e in fact.factors)


def _inverse_mod(a: int, b: int) -> int:
    return pow(a, -1, b)


def subgroup_decompose(g: GroupElement) -> tuple[int, ...]:
    """Write g as a product over the prime-order subgroup copies.

    For square-free order N = b_1 * ... * b_m, returns (k_1, ..., k_m)
    with k_i in [0, b_i) and index = sum_i (N // b_i) * k_i (mod N).
    Primes ascending.
    """
    m = g.group.order
    if m < 2:
        raise ValueError("decomposition needs order >= 2")
    fact = factorize(m)
    if not fact.is_squarefree:
        raise ValueError(f"order {m} is not square-free")
    out = []
    for b in fact.primes:
        gen = (m // b) % b
        out.append(g.index * _inverse_mod(gen, b) % b)
    return tuple(out)


def subgroup_compose(group: CyclicGroup, components: tuple[int, ...]) -> GroupElement:
    """Inverse of subgroup_decompose: rebuild the element from (k_1, ..., k_m)."""
    m = group.order
    if m < 2:
        raise ValueError("composition needs order >= 2")
    fact = factorize(m)
    if not fact.is_squarefree:
        raise ValueError(f"order {m} is not square-free")
    if len(components) != len(fact.factors):
        raise ValueError("one component per prime factor required")
    index = 0
    for b, k in zip(fact.primes, components):
        if not 0 <= k < b:
            raise ValueError(f"component {k} out of range [0, {b})")
        index += (m // b) * k
    return GroupElement(group, index % m)


@dataclass(frozen=True)
class ExtendedGroupSpec:
    """Cyclic group of order a*n holding both an n-cycle and an a-cycle.

    Requires gcd(n, a) = 1 so the two subgroups intersect only in the
    identity; factorization is of n.
    """

    n: int
    a: int
    factorization: PrimeFactorization = field(repr=False)

    def __post_init__(self):
        if self.n < 2 or self.a < 2:
            raise ValueError("need n >= 2 and a >= 2")
        if math.gcd(self.n, self.a) != 1:
            raise ValueError(f"gcd({self.n}, {self.a}) != 1")
        if self.factorization.n != self.n:
            raise ValueError("factorization does not match n")

    @classmethod
    def of(cls, n: int, a: int) -> "ExtendedGroupSpec":
        return cls(n=n, a=a, factorization=factorize(n))

    @property
    def order(self) -> int:
        return self.a * self.n

    def group(self) -> CyclicGroup:
        return CyclicGroup(self.order)


BY_N = "byN"
BY_A = "byA"


def slice_coordinates(x: int, spec: ExtendedGroupSpec, convention: str) -> tuple[int, int]:
    """Split a slice index of the order-a*n group into two coordinates.

    byA: x = i + j*n with i in [0, n), j in [0, a).
    byN: x = i' + j'*a with i' in [0, a), j' in [0, n).
    x at or beyond a*n is reduced mod a*n first.
    """
    if x < 0:
        raise ValueError("slice index must be non-negative")
    x = x % spec.order
    if convention == BY_A:
        return x % spec.n, x // spec.n
    if convention == BY_N:
        return x % spec.a, x // spec.a
    raise ValueError(f"unknown convention {convention!r}; use {BY_N!r} or {BY_A!r}")


def recompose_slices(i: int, j: int, spec: ExtendedGroupSpec, convention: str) -> int:
    """Inverse of slice_coordinates on canonical coordinates."""
    if convention == BY_A:
        if not (0 <= i < spec.n and 0 <= j < spec.a):
            raise ValueError("coordinates out of range for byA")
        return i + j * spec.n
    if convention == BY_N:
        if not (0 <= i < spec.a and 0 <= j < spec.n):
            raise ValueError("coordinates out of range for byN")
        return i + j * spec.a
    raise ValueError(f"unknown convention {convention!r}; use {BY_N!r} or {BY_A!r}")

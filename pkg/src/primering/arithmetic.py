"""Exact integer arithmetic with a fixed 128-bit width contract.

Every quantity here is an exact non-negative integer.  Operations whose
true result would exceed 2**127 - 1 raise IntegerOverflowError instead
of silently producing a big number; modular routines never materialize
the full power and so have no such limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INT128_MAX = (1 << 127) - 1


class IntegerOverflowError(OverflowError):
    """True value exceeds the supported 128-bit magnitude."""


def checked_mul(a: int, b: int) -> int:
    """Product of two non-negative integers, refusing to exceed 128 bits."""
    if a < 0 or b < 0:
        raise ValueError("operands must be non-negative")
    result = a * b
    if result > INT128_MAX:
        raise IntegerOverflowError(f"{a} * {b} exceeds 2**127 - 1")
    return result


def checked_pow(base: int, exponent: int) -> int:
    """base**exponent exactly, raising once the true value passes 2**127 - 1."""
    if base < 0 or exponent < 0:
        raise ValueError("base and exponent must be non-negative")
    if base >= 2:
        # msb bound: base >= 2**(bl-1), so base**e >= 2**(e*(bl-1)).
        if exponent * (base.bit_length() - 1) > 127:
            raise IntegerOverflowError(
                f"{base}**{exponent} exceeds 2**127 - 1"
            )
    result = base**exponent
    if result > INT128_MAX:
        raise IntegerOverflowError(f"{base}**{exponent} exceeds 2**127 - 1")
    return result


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(a, 0) = a, and (0, 0) is rejected."""
    if a < 0 or b < 0:
        raise ValueError("gcd is defined here for non-negative integers")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus by square-and-multiply.

    The full power is never formed, so arbitrarily large exponents are
    fine regardless of the 128-bit contract on plain products.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if base < 0 or exponent < 0:
        raise ValueError("base and exponent must be non-negative")
    return pow(base, exponent, modulus)


def multiplicative_order(a: int, n: int) -> int:
    """Smallest r >= 1 with a**r = 1 (mod n); requires gcd(a, n) = 1."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, n) != 1:
        raise ValueError(f"order undefined: gcd({a}, {n}) != 1")
    y = a % n
    for r in range(1, n + 1):
        if y == 1:
            return r
        y = y * a % n
    raise RuntimeError("order not found below modulus; unreachable for coprime a")


@dataclass(frozen=True)
class PrimeFactorization:
    """Factorization n = prod(b_i**e_i), primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(b for b, _ in self.factors)

    @property
    def multiples(self) -> tuple[int, ...]:
        """n // b_i for each prime factor; generator indices of the CRT copies."""
        return tuple(self.n // b for b, _ in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def reconstruct(self) -> int:
        out = 1
        for b, e in self.factors:
            out *= b**e
        return out


def factorize(n: int) -> PrimeFactorization:
    """Trial-division factorization of n >= 2."""
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    remaining = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return PrimeFactorization(n=n, factors=tuple(factors))


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; exact for the sizes used here."""
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


@dataclass(frozen=True)
class Convergent:
    """Reduced fraction numerator/denominator from a continued fraction."""

    numerator: int
    denominator: int

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def convergents(v: int, m: int) -> list[Convergent]:
    """All continued-fraction convergents of v/m, in order.

    The last convergent equals v/m in lowest terms; v = 0 yields the
    single convergent 0/1.
    """
    if m < 1:
        raise ValueError("denominator must be at least 1")
    if not 0 <= v < m:
        raise ValueError("need 0 <= v < m")
    num, den = v, m
    h_prev, h_prev2 = 1, 0
    k_prev, k_prev2 = 0, 1
    out: list[Convergent] = []
    while True:
        a = num // den
        h_prev2, h_prev = h_prev, a * h_prev + h_prev2
        k_prev2, k_prev = k_prev, a * k_prev + k_prev2
        out.append(Convergent(h_prev, k_prev))
        num, den = den, num - a * den
        if den == 0:
            return out

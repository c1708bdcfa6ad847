"""Exact and floating-point number-theoretic primitives.

Exact (arbitrary-precision integers):
    mobius_sieve(n)     -- table of the Moebius function mu(1)..mu(n)
    faulhaber_sum(d, p) -- power sum 1^d + 2^d + ... + (p-1)^d

Floating point (with explicit error control):
    zeta(d, tol)  -- Riemann zeta at integer d >= 2, |error| <= tol
    gamma_pos(x)  -- Euler gamma on the positive reals

The Moebius values are the weights of the inclusion-exclusion sieve that
recovers gcd-one lattice point counts from raw lattice point counts; zeta
and gamma feed the density and volume constants of the asymptotics module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

__all__ = ["MobiusTable", "mobius_sieve", "zeta", "gamma_pos", "faulhaber_sum"]


@lru_cache(maxsize=8)
def _mu_upto(limit: int) -> tuple[int, ...]:
    """mu(0..limit) as a tuple (index 0 is a filler zero). Linear sieve."""
    mu = [0] * (limit + 1)
    mu[1] = 1
    is_composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            is_composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0  # p^2 divides ip
                break
            mu[ip] = -mu[i]
    return tuple(mu)


@dataclass(frozen=True)
class MobiusTable:
    """Values mu(1)..mu(limit), immutable and shareable.

    mu(1) = 1, mu(n) = (-1)^k for n a product of k distinct primes,
    mu(n) = 0 when a squared prime divides n.
    """

    limit: int
    values: tuple[int, ...]  # values[n] == mu(n); values[0] unused

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError(f"mu({n}) outside table range 1..{self.limit}")
        return self.values[n]


def mobius_sieve(limit: int) -> MobiusTable:
    """Moebius function table up to `limit` via a linear prime sieve, O(limit)."""
    if limit < 1:
        raise DomainError(f"sieve limit must be >= 1, got {limit}")
    return MobiusTable(limit=limit, values=_mu_upto(limit))


@lru_cache(maxsize=64)
def zeta(d: int, tol: float = 1e-12) -> float:
    """Riemann zeta(d) for integer d >= 2 with absolute error <= tol.

    Truncated series plus the integral tail bracket: the tail sum over
    n > N lies between I(N+1) and I(N) where I(x) = x^(1-d)/(d-1); the
    midpoint of the bracket is added, so the error is at most half the
    bracket width, which is below N^(-d)/2.
    """
    if d <= 1:
        raise DomainError(f"zeta series requires d >= 2, got {d}")
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    n_terms = math.ceil((1.0 / (2.0 * tol)) ** (1.0 / d)) + 1
    # sum small-to-large magnitudes for float accuracy
    partial = 0.0
    for n in range(n_terms, 0, -1):
        partial += float(n) ** (-d)
    tail_hi = n_terms ** (1 - d) / (d - 1)
    tail_lo = (n_terms + 1) ** (1 - d) / (d - 1)
    return partial + 0.5 * (tail_hi + tail_lo)


def gamma_pos(x: float) -> float:
    """Euler gamma on x > 0; delegates to the platform Lanczos implementation."""
    if x <= 0:
        raise DomainError(f"gamma_pos requires x > 0, got {x}")
    return math.gamma(x)


def faulhaber_sum(d: int, p: int) -> int:
    """Exact power sum of the first p-1 positive integers: sum_{i=1}^{p-1} i^d."""
    if d < 0:
        raise DomainError(f"exponent must be >= 0, got {d}")
    if p < 1:
        raise DomainError(f"upper bound must be >= 1, got {p}")
    return sum(i**d for i in range(1, p))

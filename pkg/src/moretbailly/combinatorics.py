"""Binomials, lattice-point multiplicities, Bernoulli numbers, Hasse polynomials.

The multiplicity ``mu(n, p, t, l)`` counts integer vectors ``(l_0, ..., l_n)``
with ``0 <= l_i <= p-1`` and ``l_0 + ... + l_n = t - p*l``.  The fast path is
inclusion-exclusion over the coordinates that overflow the cube; two
independent oracles (full enumeration, polynomial convolution) back it up.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt
from typing import Optional

from .errors import ParameterError
from .series import todd_coefficients

__all__ = [
    "ENUMERATION_LIMIT",
    "MuQuery",
    "SupersingularWitness",
    "WORKERS_ENV",
    "bernoulli",
    "binom",
    "hasse_polynomial",
    "is_prime",
    "mu",
    "mu_oracle",
    "next_prime",
    "primes_upto",
    "supersingular_witness",
]

ENUMERATION_LIMIT = 10**8
WORKERS_ENV = "MORETBAILLY_WORKERS"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


def primes_upto(bound: int) -> list[int]:
    """Primes ``<= bound`` by the sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, isqrt(bound) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytes(len(range(q * q, bound + 1, q)))
    return [q for q, flag in enumerate(sieve) if flag]


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    q = max(n + 1, 2)
    while not is_prime(q):
        q += 1
    return q


def binom(x, r: int):
    """Generalized binomial ``x (x-1) ... (x-r+1) / r!``; zero for ``r < 0``.

    Integer ``x`` yields an ``int`` (the quotient always divides exactly).

    >>> binom(-1, 3)
    -1
    >>> binom(Fraction(1, 2), 2)
    Fraction(-1, 8)
    """
    if r < 0:
        return 0
    num = 1
    for i in range(r):
        num *= x - i
    value = Fraction(num, 1) / factorial(r)
    if isinstance(x, int):
        if value.denominator != 1:
            raise AssertionError(f"binom({x}, {r}) is not integral")
        return value.numerator
    return value


@dataclass(frozen=True)
class MuQuery:
    n: int
    p: int
    t: int
    l: int

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("n must be non-negative")
        if self.p < 2:
            raise ParameterError("p must be at least 2")

    @property
    def target(self) -> int:
        """Required coordinate sum ``t - p*l``."""
        return self.t - self.p * self.l

    @property
    def max_sum(self) -> int:
        return (self.n + 1) * (self.p - 1)


def _as_query(q) -> MuQuery:
    return q if isinstance(q, MuQuery) else MuQuery(*q)


def mu(n: int, p: int, t: int, l: int) -> int:
    """Number of lattice points of the hypercube slice for ``(n, p, t, l)``."""
    q = MuQuery(n, p, t, l)
    s = q.target
    if s < 0 or s > q.max_sum:
        return 0
    k = n + 1
    # terms with j*p > s count vectors with a negative slack and vanish
    total = 0
    for j in range(min(k, s // p) + 1):
        term = comb(k, j) * comb(s - j * p + n, n)
        total += -term if j % 2 else term
    return total


def _count_slice(first: int, n: int, p: int, s: int) -> int:
    # vectors (first, l_1, ..., l_{n-1}, last) with last determined by the sum
    rest = s - first
    count = 0
    for point in itertools.product(range(p), repeat=n - 1):
        last = rest - sum(point)
        if 0 <= last <= p - 1:
            count += 1
    return count


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _enumerate(q: MuQuery, workers: int) -> int:
    n, p, s = q.n, q.p, q.target
    if n == 0:
        return int(0 <= s <= p - 1)
    if workers <= 1:
        return sum(_count_slice(a, n, p, s) for a in range(p))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_count_slice, range(p), [n] * p, [p] * p, [s] * p)
        return sum(parts)


def _convolve(q: MuQuery) -> int:
    s = q.target
    if s < 0 or s > q.max_sum:
        return 0
    poly = [1]
    for _ in range(q.n + 1):
        # multiply by 1 + x + ... + x^(p-1), dropping degrees above s
        out = [0] * min(len(poly) + q.p - 1, s + 1)
        for i, c in enumerate(poly):
            if c == 0:
                continue
            for e in range(i, min(i + q.p, len(out))):
                out[e] += c
        poly = out
    return poly[s] if s < len(poly) else 0


def mu_oracle(q, method: str = "convolve", workers: Optional[int] = None) -> int:
    """Reference count of the same lattice points by an independent method.

    ``method="enumerate"`` walks every point of the slice (guarded by
    :data:`ENUMERATION_LIMIT`); ``method="convolve"`` reads off a coefficient
    of ``(1 + x + ... + x^(p-1))^(n+1)``.
    """
    q = _as_query(q)
    if method == "enumerate":
        if q.p ** (q.n + 1) > ENUMERATION_LIMIT:
            raise ParameterError("enumeration infeasible, use convolve")
        return _enumerate(q, _workers() if workers is None else workers)
    if method == "convolve":
        return _convolve(q)
    raise ParameterError(f"unknown oracle method {method!r}")


@lru_cache(maxsize=None)
def bernoulli(i: int) -> Fraction:
    """Bernoulli number with the ``B_1 = +1/2`` convention."""
    if i < 0:
        raise ParameterError("Bernoulli index must be non-negative")
    return todd_coefficients(i + 1)[i] * factorial(i)


def hasse_polynomial(p: int) -> list[int]:
    """Coefficients of ``sum_i binom(m, i)^2 T^i`` with ``m = (p-1)/2``."""
    m = (p - 1) // 2
    return [comb(m, i) ** 2 for i in range(m + 1)]


@dataclass(frozen=True)
class SupersingularWitness:
    p: int
    lambda_in_base_field: Optional[int]
    has_root_in_Fp: bool


def supersingular_witness(p: int) -> SupersingularWitness:
    """Scan the Legendre parameters ``2..p-1`` for a root of the Hasse polynomial mod p."""
    if p % 2 == 0 or not is_prime(p):
        raise ParameterError(f"p={p} must be an odd prime")
    coeffs = [c % p for c in hasse_polynomial(p)]
    for lam in range(2, p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % p
        if acc == 0:
            return SupersingularWitness(p, lam, True)
    return SupersingularWitness(p, None, False)

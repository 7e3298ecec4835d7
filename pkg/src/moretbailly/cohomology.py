"""Closed-form cohomology of Moret-Bailly families and of sheaves on P^n.

A Moret-Bailly family ``Y = (A x P^n)/H`` is fixed by ``(n, d, p)``: the base
dimension, the degree of the polynomials defining ``H``, and the
characteristic.  Everything here is integer arithmetic on top of
:func:`~moretbailly.combinatorics.mu` and binomial coefficients.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .combinatorics import binom, is_prime, mu
from .errors import ConsistencyError, ParameterError

__all__ = [
    "FamilyParams",
    "HodgeVector",
    "Kodaira",
    "SplittingType",
    "betti",
    "bott",
    "canonical_degree",
    "h1",
    "h2",
    "h_exterior_frobenius",
    "hodge_vector",
    "kodaira",
    "splitting_type",
]


@dataclass(frozen=True)
class FamilyParams:
    n: int
    d: int
    p: int

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("n must be non-negative")
        if self.d < 1:
            raise ParameterError("d must be at least 1")
        if not is_prime(self.p):
            raise ParameterError(f"p={self.p} is not prime")

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def g(self) -> int:
        return self.n + 1


class Kodaira(enum.Enum):
    MINUS_INFINITY = "-inf"
    ZERO = "0"
    N = "n"


def canonical_degree(fp: FamilyParams) -> int:
    """The integer m with ``omega_Y = O_Y(m)``."""
    return fp.d * (fp.p - 1) - (fp.n + 1)


def kodaira(fp: FamilyParams) -> Kodaira:
    m = canonical_degree(fp)
    if m < 0:
        return Kodaira.MINUS_INFINITY
    if m == 0:
        return Kodaira.ZERO
    return Kodaira.N


def bott(n: int, r: int, s: int, l: int) -> int:
    """``h^s(P^n, Omega^r(l))``.

    Each branch carries the range in which its product of binomials is
    valid; outside every branch the group vanishes.  The branches are
    evaluated independently and must agree wherever several apply.
    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    if not (0 <= r <= n and 0 <= s <= n):
        return 0
    values = []
    if s == 0 and l > r:
        values.append(binom(l + n - r, l) * binom(l - 1, r))
    if s == n and l < r - n:
        values.append(binom(r - l, r) * binom(-l - 1, n - r))
    if r == s and l == 0:
        values.append(1)
    if not values:
        return 0
    if len(set(values)) != 1:
        raise ConsistencyError(f"Bott cases disagree at n={n}, r={r}, s={s}, l={l}: {values}")
    return values[0]


@dataclass(frozen=True)
class SplittingType:
    """Multiplicities of ``O(l)`` in the Frobenius push-forward ``F_*(O(t))``."""

    n: int
    p: int
    t: int
    entries: dict[int, int] = field(default_factory=dict)

    @property
    def a(self) -> int:
        """Smallest possible twist, ``ceil((t - (n+1)(p-1)) / p)``."""
        return -(((self.n + 1) * (self.p - 1) - self.t) // self.p)

    @property
    def b(self) -> int:
        """Largest possible twist, ``floor(t / p)``."""
        return self.t // self.p

    @property
    def rank(self) -> int:
        return sum(self.entries.values())

    def sorted_entries(self) -> list[tuple[int, int]]:
        return sorted(self.entries.items())


def splitting_type(n: int, p: int, t: int) -> SplittingType:
    bounds = SplittingType(n, p, t)
    entries = {}
    for l in range(bounds.a, bounds.b + 1):
        m = mu(n, p, t, l)
        if m:
            entries[l] = m
    return SplittingType(n, p, t, entries)


def h_exterior_frobenius(n: int, p: int, r: int, t: int, s: int) -> int:
    """``h^s`` of ``Lambda^r(F^* Omega^1(1)) (x) O(t)`` on P^n.

    The Frobenius map is affine and the projection formula gives
    ``F_* F_{r,t} = Omega^r(r) (x) F_*(O(t))``, so the answer is a sum of Bott
    numbers weighted by the splitting multiplicities.
    """
    if not (0 <= r <= n and 0 <= s <= n):
        return 0
    st = splitting_type(n, p, t)
    return sum(m * bott(n, r, s, l + r) for l, m in st.entries.items())


@dataclass(frozen=True)
class HodgeVector:
    n: int
    p: int
    values: tuple[int, ...]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h for i, h in enumerate(self.values))

    def is_palindromic(self) -> bool:
        return self.values == self.values[::-1]


def hodge_vector(n: int, p: int) -> HodgeVector:
    """``h^0(O_Y), ..., h^{2n+1}(O_Y)`` for the degree-one family."""
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if p < n + 1:
        raise ParameterError("formula requires p >= n+1")
    values = []
    for j in range(n + 1):
        values.append(mu(n, p, 0, -j))
        values.append(mu(n, p, 1, -j))
    return HodgeVector(n, p, tuple(values))


def h1(n: int, d: int) -> int:
    """``h^1(O_Y) = binom(n+d, d)``."""
    return binom(n + d, d)


def h2(n: int, p: int) -> int:
    """``h^2(O_Y)`` for d = 1: vectors in ``[0, p-1]^{n+1}`` summing to p."""
    return mu(n, p, p, 0)


def betti(n: int, i: int) -> int:
    """Rank of ``H^i`` in l-adic cohomology: ``sum over even j of binom(2n+2, i-j)``."""
    if not 0 <= i <= 2 * (2 * n + 1):
        return 0
    # j ranges over the even degrees of H^*(P^n), i.e. 0..2n
    return sum(binom(2 * n + 2, i - j) for j in range(0, 2 * n + 1, 2))

"""Truncated power series ``R[[x]] / (x^order)`` over an exact coefficient ring.

The ring is either the rationals (:class:`~fractions.Fraction`) or polynomials
in ``p`` (:class:`~moretbailly.exact.PPoly`).  The same type doubles as the
Chow ring ``Q[h]/(h^{n+1})`` of projective n-space, with ``x`` playing ``h``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import ParameterError
from .exact import PPoly, format_rational

Coeff = Union[Fraction, PPoly]

__all__ = [
    "TruncSeries",
    "exp_linear",
    "exp_minus_one_over_x",
    "series_arith",
    "series_inv",
    "todd_coefficients",
    "todd_series",
]


def _ring_of(c) -> type:
    return PPoly if isinstance(c, PPoly) else Fraction


def _normalize(c, ring: type):
    if ring is PPoly:
        return c if isinstance(c, PPoly) else PPoly([c])
    if isinstance(c, PPoly):
        raise ParameterError("polynomial coefficient in a rational series")
    return Fraction(c)


class TruncSeries:
    """Dense truncated power series with a fixed number of coefficients."""

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Iterable, order: int | None = None, ring: type | None = None):
        cs = list(coeffs)
        if order is not None:
            if len(cs) > order:
                cs = cs[:order]
            cs += [0] * (order - len(cs))
        if not cs:
            raise ParameterError("series order must be at least 1")
        if ring is None:
            ring = PPoly if any(isinstance(c, PPoly) for c in cs) else Fraction
        self._ring = ring
        self._coeffs = tuple(_normalize(c, ring) for c in cs)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def ring(self) -> type:
        return self._ring

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, i: int):
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    @classmethod
    def one(cls, order: int, ring: type = Fraction) -> "TruncSeries":
        return cls([1], order, ring)

    def is_unit(self) -> bool:
        c0 = self._coeffs[0]
        return c0.is_unit() if isinstance(c0, PPoly) else c0 != 0

    def _check(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise ParameterError("can only combine a series with another series")
        if other.order != self.order:
            raise ParameterError(f"order mismatch: {self.order} vs {other.order}")
        if other.ring is not self.ring:
            raise ParameterError(
                f"coefficient ring mismatch: {self.ring.__name__} vs {other.ring.__name__}"
            )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_arith(self, other, "add")

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_arith(self, -other, "add")

    def __neg__(self) -> "TruncSeries":
        return TruncSeries((-c for c in self._coeffs), ring=self._ring)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_arith(self, other, "mul")
        if isinstance(other, (int, Fraction, PPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, PPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            return series_inv(self) ** (-k)
        out, base = TruncSeries.one(self.order, self.ring), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "TruncSeries":
        ring = PPoly if isinstance(c, PPoly) else self._ring
        return TruncSeries((a * c for a in self._coeffs), ring=ring)

    def to_ring(self, ring: type) -> "TruncSeries":
        return TruncSeries(self._coeffs, ring=ring)

    def evaluate_coefficients(self, p) -> "TruncSeries":
        """Substitute a value for ``p`` in every polynomial coefficient."""
        if self._ring is Fraction:
            return self
        return TruncSeries((c(p) for c in self._coeffs), ring=Fraction)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self._coeffs]})"

    def to_json(self) -> list:
        if self._ring is PPoly:
            return [c.to_json() for c in self._coeffs]
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "TruncSeries":
        if data and isinstance(data[0], list):
            return cls((PPoly.from_json(c) for c in data), ring=PPoly)
        return cls((Fraction(c) for c in data), ring=Fraction)


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """Coefficient-wise sum (``op="add"``) or truncated Cauchy product (``op="mul"``)."""
    a._check(b)
    n = a.order
    if op == "add":
        return TruncSeries((x + y for x, y in zip(a.coeffs, b.coeffs)), ring=a.ring)
    if op == "mul":
        out = []
        for k in range(n):
            acc = a.coeffs[0] * b.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + a.coeffs[i] * b.coeffs[k - i]
            out.append(acc)
        return TruncSeries(out, ring=a.ring)
    raise ParameterError(f"unknown series operation {op!r}")


def series_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a unit of the ring."""
    if not a.is_unit():
        raise ParameterError("series not invertible")
    c0 = a.coeffs[0]
    inv0 = c0.inverse() if isinstance(c0, PPoly) else 1 / c0
    out = [inv0]
    for k in range(1, a.order):
        acc = a.coeffs[1] * out[k - 1]
        for i in range(2, k + 1):
            acc = acc + a.coeffs[i] * out[k - i]
        out.append(-(inv0 * acc))
    return TruncSeries(out, ring=a.ring)


def _powers(c, order: int) -> list:
    out = [Fraction(1) if not isinstance(c, PPoly) else PPoly([1])]
    for _ in range(1, order):
        out.append(out[-1] * c)
    return out


def exp_linear(c, order: int) -> TruncSeries:
    """``exp(c*x)`` truncated; ``c`` may be rational or a polynomial in ``p``."""
    ring = _ring_of(c)
    pw = _powers(c if ring is PPoly else Fraction(c), order)
    return TruncSeries((pw[k] * Fraction(1, factorial(k)) for k in range(order)), ring=ring)


def exp_minus_one_over_x(c, order: int) -> TruncSeries:
    """``(exp(c*x) - 1) / (c*x) = sum_k c^k x^k / (k+1)!``, a unit for every ``c``."""
    ring = _ring_of(c)
    pw = _powers(c if ring is PPoly else Fraction(c), order)
    return TruncSeries((pw[k] * Fraction(1, factorial(k + 1)) for k in range(order)), ring=ring)


@lru_cache(maxsize=None)
def _todd_unit(order: int) -> tuple[Fraction, ...]:
    # x / (1 - e^{-x}) is the inverse of (1 - e^{-x}) / x
    return series_inv(exp_minus_one_over_x(-1, order)).coeffs


def todd_coefficients(order: int) -> tuple[Fraction, ...]:
    """Coefficients ``B_i / i!`` of ``x / (1 - e^{-x})`` for ``i < order``."""
    return _todd_unit(order)


def todd_series(a, order: int) -> TruncSeries:
    """Todd class ``a*x / (1 - e^{-a*x})`` of a line bundle with first Chern class ``a*x``."""
    ring = _ring_of(a)
    pw = _powers(a if ring is PPoly else Fraction(a), order)
    base = todd_coefficients(order)
    return TruncSeries((pw[i] * base[i] for i in range(order)), ring=ring)

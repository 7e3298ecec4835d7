"""Exact rationals and dense univariate polynomials in ``p``.

Rationals are :class:`fractions.Fraction`; this module only adds the
serialization convention (``"num/den"`` or ``"num"``) and a small immutable
polynomial type whose coefficients are Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import ParameterError

Scalar = Union[int, Fraction]

__all__ = [
    "Fraction",
    "PPoly",
    "as_fraction",
    "cauchy_root_bound",
    "format_rational",
    "parse_rational",
    "poly_eval",
]


def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Scalar) -> str:
    """Serialize an exact rational as ``"num/den"`` (``"num"`` when den = 1)."""
    return str(as_fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class PPoly:
    """Polynomial in the indeterminate ``p`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``p**i``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.

    >>> f = PPoly([Fraction(-3, 8), Fraction(1, 2), Fraction(-1, 8)])
    >>> f(3)
    Fraction(0, 1)
    >>> f.degree
    2
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def gen(cls) -> "PPoly":
        """The polynomial ``p``."""
        return cls([0, 1])

    @classmethod
    def const(cls, c: Scalar) -> "PPoly":
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_unit(self) -> bool:
        return self.degree == 0

    def inverse(self) -> "PPoly":
        if not self.is_unit():
            raise ZeroDivisionError("only nonzero constant polynomials are invertible")
        return PPoly([1 / self._coeffs[0]])

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    # ring operations; ints and Fractions are promoted to constants
    @staticmethod
    def _lift(other) -> "PPoly | None":
        if isinstance(other, PPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PPoly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return PPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "PPoly":
        return PPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return PPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] += a * b
        return PPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PPoly(c / other for c in self._coeffs)
        if isinstance(other, PPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int) -> "PPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = PPoly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "PPoly":
        return PPoly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(("PPoly", self._coeffs))

    def __repr__(self) -> str:
        return f"PPoly({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("p" if i == 1 else f"p^{i}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}*{mono}"
            elif a.numerator == 1:
                body = f"{mono}/{a.denominator}"
            else:
                body = f"{a.numerator}*{mono}/{a.denominator}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "PPoly":
        return cls(parse_rational(s) for s in data)


def poly_eval(f: PPoly, p: Scalar) -> Fraction:
    """Evaluate ``f`` at ``p`` exactly (Horner)."""
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * p + c
    return acc


def cauchy_root_bound(f: PPoly) -> Fraction:
    """Cauchy bound ``1 + max |f_i / f_deg|``; every complex root lies strictly inside it."""
    if f.degree < 1:
        raise ParameterError("constant polynomial has no root bound")
    lead = f.leading
    return 1 + max(abs(c / lead) for c in f.coeffs[:-1])

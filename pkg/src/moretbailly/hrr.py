"""Euler characteristics via Hirzebruch-Riemann-Roch and the W2 obstruction.

For the ample sheaf ``L = psi^*(E) (x) phi^*(O(s))`` on a Moret-Bailly family,
``chi(L (x) omega_Y) = p^n * chi(E) * lambda_n(p)`` where ``lambda_n`` is the
top coefficient of a product of Todd-type series.  A negative value at a
prime ``p >= dim Y`` rules out a lift of ``Y`` to ``W_2(k)`` by the
Deligne-Illusie vanishing theorem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, lcm
from typing import Optional

from .combinatorics import is_prime, next_prime, primes_upto
from .cohomology import FamilyParams, canonical_degree
from .errors import ParameterError
from .exact import PPoly, cauchy_root_bound
from .series import TruncSeries, exp_linear, exp_minus_one_over_x, series_inv, todd_series

__all__ = [
    "LeadingSign",
    "ObstructionInput",
    "Verdict",
    "VerdictStatus",
    "euler_characteristic",
    "lambda3_comparison",
    "lambda3_derivative_root",
    "lambda_numeric",
    "lambda_poly",
    "leading_sign_audit",
    "leading_sign_claim",
    "published_lambda3",
    "q_class",
    "threshold_prime",
    "w2_verdict",
]


@dataclass(frozen=True)
class ObstructionInput:
    fp: FamilyParams
    s: Optional[int] = None
    chiE: int = 1

    def __post_init__(self):
        if self.s is not None and self.s < 1:
            raise ParameterError("s must be at least 1")
        if self.chiE < 0:
            raise ParameterError("chiE must be non-negative")


def q_class(fp: FamilyParams) -> TruncSeries:
    """Todd class of ``Y`` pushed to ``Q[h]/(h^{n+1})``.

    ``((e^{dx}-1)/(dx)) * (dpx/(e^{dpx}-1)) * (x/(1-e^{-x}))^{n+1}``; the
    reciprocal factors are inverses of unit series.
    """
    order = fp.n + 1
    d, p = fp.d, fp.p
    return (
        exp_minus_one_over_x(d, order)
        * series_inv(exp_minus_one_over_x(d * p, order))
        * todd_series(1, order) ** (fp.n + 1)
    )


def _top(series: TruncSeries):
    return series[series.order - 1]


def euler_characteristic(inp: ObstructionInput, t: int) -> Fraction:
    """``chi(psi^*E (x) phi^*O(t))``; for ``L (x) omega_Y`` use ``t = m + s``."""
    fp = inp.fp
    integral = _top(exp_linear(t, fp.n + 1) * q_class(fp))
    return Fraction(fp.p) ** (fp.g - 1) * inp.chiE * integral


def _lambda_series(n: int, d: int, s: int, scale) -> TruncSeries:
    order = n + 1
    ring = PPoly if isinstance(scale, PPoly) else Fraction
    head = (
        exp_minus_one_over_x(d, order)
        * todd_series(1, order) ** (n + 1)
        * exp_linear(-(d + n + 1 - s), order)
    )
    return head.to_ring(ring) * todd_series(scale, order)


def lambda_poly(n: int, d: int, s: int) -> PPoly:
    """``lambda_n`` as an exact polynomial in ``p``.

    Only the last Todd factor depends on ``p``, so the whole product is taken
    over ``Q[p]`` with that factor's argument set to ``d*p``.
    """
    if n < 1:
        raise ParameterError("lambda_poly needs n >= 1")
    return _top(_lambda_series(n, d, s, PPoly([0, d])))


def lambda_numeric(n: int, d: int, s: int, p: int) -> Fraction:
    """``lambda_n(p)`` from the unrearranged Todd class at a fixed ``p``."""
    series = exp_linear(d * (p - 1) - (n + 1) + s, n + 1) * q_class(FamilyParams(n, d, p))
    return _top(series)


# the n = 3, s = 1 polynomial in its published form
def published_lambda3(d: int) -> PPoly:
    return PPoly([
        Fraction(-(d**3 + 2 * d**2 + 2 * d), 24),
        Fraction(d**3 + 3 * d**2 + 2 * d, 12),
        Fraction(-(d**3 + 2 * d**2), 24),
    ])


@dataclass(frozen=True)
class Lambda3Comparison:
    d: int
    computed: PPoly
    printed: PPoly

    @property
    def mismatched_powers(self) -> list[int]:
        top = max(self.computed.degree, self.printed.degree)
        return [i for i in range(top + 1) if self.computed.coeff(i) != self.printed.coeff(i)]

    @property
    def matches(self) -> bool:
        return not self.mismatched_powers


def lambda3_comparison(d: int) -> Lambda3Comparison:
    return Lambda3Comparison(d, lambda_poly(3, d, 1), published_lambda3(d))


def lambda3_derivative_root(d: int) -> Fraction:
    """Stationary point of ``lambda_3`` at ``s = 1``; a diagnostic only."""
    lam = lambda_poly(3, d, 1)
    deriv = lam.derivative()
    return -deriv.coeff(0) / deriv.coeff(1)


class LeadingSign(enum.Enum):
    NEGATIVE = "negative"
    POSITIVE = "positive"


def leading_sign_claim(n: int) -> tuple[LeadingSign, int]:
    """Predicted sign ``(-1)^(j-1)`` of the leading coefficient, ``j = n // 2``."""
    if n < 2:
        raise ParameterError("leading sign rule needs n >= 2")
    j = n // 2
    return (LeadingSign.POSITIVE if j % 2 == 1 else LeadingSign.NEGATIVE), j


@dataclass(frozen=True)
class SignAuditRow:
    n: int
    j: int
    s: int
    degree: int
    leading: Fraction
    claimed: LeadingSign
    # "negative whenever n is not 2 mod 4"
    prose_negative: bool

    @property
    def computed(self) -> LeadingSign:
        return LeadingSign.NEGATIVE if self.leading < 0 else LeadingSign.POSITIVE

    @property
    def agrees_with_rule(self) -> bool:
        return self.computed is self.claimed

    @property
    def agrees_with_prose(self) -> bool:
        if not self.prose_negative:
            return True
        return self.computed is LeadingSign.NEGATIVE


def leading_sign_audit(ns=range(2, 10), d: int = 1, s: Optional[int] = None) -> list[SignAuditRow]:
    rows = []
    for n in ns:
        s_n = n + 2 if s is None else s
        lam = lambda_poly(n, d, s_n)
        claimed, j = leading_sign_claim(n)
        rows.append(SignAuditRow(n, j, s_n, lam.degree, lam.leading, claimed, n % 4 != 2))
    return rows


@dataclass(frozen=True)
class Threshold:
    prime: Optional[int]
    bound: Fraction
    polynomial: PPoly


def threshold_prime(n: int, d: int, s: int) -> Threshold:
    """Least prime P with ``lambda_n(p) < 0`` for every prime ``p >= P``.

    ``prime`` is None when the leading coefficient is non-negative.  Primes
    up to the Cauchy bound are checked exactly; beyond it the sign equals the
    sign of the leading coefficient.
    """
    if n < 2:
        raise ParameterError("threshold search needs n >= 2")
    lam = lambda_poly(n, d, s)
    if lam.degree < 1:
        raise ParameterError("constant polynomial has no root bound")
    bound = cauchy_root_bound(lam)
    if lam.leading >= 0:
        return Threshold(None, bound, lam)
    # clearing denominators keeps signs and lets the scan run on integers
    scale = lcm(*(c.denominator for c in lam.coeffs))
    ints = [int(c * scale) for c in reversed(lam.coeffs)]
    last_bad = 1
    for q in reversed(primes_upto(ceil(bound))):
        acc = 0
        for c in ints:
            acc = acc * q + c
        if acc >= 0:
            last_bad = q
            break
    return Threshold(next_prime(last_bad), bound, lam)


class VerdictStatus(enum.Enum):
    OBSTRUCTED = "obstructed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    lambda_value: Fraction
    chi_value: Fraction
    s_used: int
    conditions: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "lambda": str(self.lambda_value),
            "chi": str(self.chi_value),
            "s_used": self.s_used,
            "conditions": dict(self.conditions),
        }


def w2_verdict(inp: ObstructionInput) -> Verdict:
    """Decide whether ``chi(L (x) omega_Y) < 0`` certifies that Y has no W2 lift.

    Without an explicit ``s`` the twists ``1 .. n+d+2`` are tried and the first
    one giving a negative ``lambda_n(p)`` is used.
    """
    fp = inp.fp
    if not is_prime(fp.p):
        raise ParameterError(f"p={fp.p} is not prime")
    candidates = [inp.s] if inp.s is not None else list(range(1, fp.n + fp.d + 3))
    m = canonical_degree(fp)
    chosen = None
    for s in candidates:
        lam = lambda_numeric(fp.n, fp.d, s, fp.p)
        if chosen is None:
            chosen = (s, lam)
        if lam < 0:
            chosen = (s, lam)
            break
    s, lam = chosen
    chi = euler_characteristic(inp, m + s)
    conditions = {
        "prime": True,
        "dim_ok": fp.p >= fp.dim,
        "lambda_negative": lam < 0,
    }
    obstructed = all(conditions.values()) and inp.chiE > 0
    status = VerdictStatus.OBSTRUCTED if obstructed else VerdictStatus.INCONCLUSIVE
    return Verdict(status, lam, chi, s, conditions)

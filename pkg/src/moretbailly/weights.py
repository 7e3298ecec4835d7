"""Residue bookkeeping for mu_l-weights on the cohomology of Y.

A weight is a character of ``Z/lZ``.  Relative Frobenius multiplies
characters by ``p``, so each relevant cohomology group carries weights
``m * w0 mod l`` for a short, fixed list of multipliers ``m``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .combinatorics import is_prime
from .errors import ParameterError

__all__ = ["Group", "SignInvolutionReport", "WeightSet", "multipliers", "sign_involution_report", "weight_set"]


class Group(enum.Enum):
    H2_STRUCTURE = "H2_structure"
    H1_THETA_RELATIVE = "H1_theta_relative"
    H1_THETA_PULLBACK = "H1_theta_pullback"


def multipliers(group: Group, p: int) -> tuple[int, ...]:
    if group is Group.H2_STRUCTURE:
        return (p * p,)
    if group is Group.H1_THETA_RELATIVE:
        return (p + 1, p * p + 1, p * p + p)
    if group is Group.H1_THETA_PULLBACK:
        return (p, p * p)
    raise ParameterError(f"unknown group {group!r}")


@dataclass(frozen=True)
class WeightSet:
    modulus: int
    w0: int
    residues: frozenset[int]

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "w0": self.w0, "residues": sorted(self.residues)}


def weight_set(group, p: int, l: int, w0: int) -> WeightSet:
    """Possible weights of ``group`` when the generator acts with weight ``w0``.

    Valid for ``(p, n) != (2, 1)``; that case is not checked here because
    ``n`` does not enter the residues.
    """
    if l < 2:
        raise ParameterError("modulus l must be at least 2")
    group = Group(group) if not isinstance(group, Group) else group
    w0 %= l
    return WeightSet(l, w0, frozenset(m * w0 % l for m in multipliers(group, p)))


@dataclass(frozen=True)
class SignInvolutionReport:
    p: int
    h2_scalar: int
    theta_rel_scalar: int
    theta_pullback_scalar: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h2_scalar, self.theta_rel_scalar, self.theta_pullback_scalar)


def _scalar(ws: WeightSet) -> int:
    # the involution acts by (-1)^w on a pure piece of weight w
    if len(ws.residues) != 1:
        raise ParameterError("weights are mixed; no single scalar")
    (w,) = ws.residues
    return -1 if w else 1


def sign_involution_report(p: int) -> SignInvolutionReport:
    if p == 2:
        raise ParameterError("sign involution requires p != 2")
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    return SignInvolutionReport(
        p,
        _scalar(weight_set(Group.H2_STRUCTURE, p, 2, 1)),
        _scalar(weight_set(Group.H1_THETA_RELATIVE, p, 2, 1)),
        _scalar(weight_set(Group.H1_THETA_PULLBACK, p, 2, 1)),
    )

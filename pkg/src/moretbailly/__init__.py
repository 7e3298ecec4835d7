"""Exact invariants of Moret-Bailly families ``Y = (A x P^n)/H`` in characteristic p.

Lattice-point counts give the cohomology ``h^i(O_Y)``, Todd-class series
give Euler characteristics, and their sign decides whether ``Y`` can lift
to ``W_2(k)``.
"""

from .cohomology import (
    FamilyParams,
    HodgeVector,
    Kodaira,
    SplittingType,
    betti,
    bott,
    canonical_degree,
    h1,
    h2,
    h_exterior_frobenius,
    hodge_vector,
    kodaira,
    splitting_type,
)
from .combinatorics import MuQuery, bernoulli, binom, mu, mu_oracle, supersingular_witness
from .errors import ConsistencyError, ParameterError
from .exact import PPoly, cauchy_root_bound, poly_eval
from .hrr import (
    ObstructionInput,
    Verdict,
    VerdictStatus,
    euler_characteristic,
    lambda_poly,
    leading_sign_claim,
    q_class,
    threshold_prime,
    w2_verdict,
)
from .report import InvariantReport, invariants, reproduce_table
from .series import TruncSeries, exp_linear, series_arith, series_inv, todd_series
from .weights import sign_involution_report, weight_set

__version__ = "0.1.0"

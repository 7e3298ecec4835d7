import itertools

import pytest

from moretbailly.cohomology import (
    FamilyParams,
    Kodaira,
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
from moretbailly.combinatorics import binom, mu, mu_oracle
from moretbailly.errors import ParameterError


def koszul_euler_characteristic(n, r, l):
    """chi(Omega^r(l)) from the Koszul complex of the Euler sequence.

    chi(O(k)) = binom(n+k, n) holds for every integer k as a polynomial identity.
    """
    return sum((-1) ** (r - i) * binom(n + 1, i) * binom(n + l - i, n) for i in range(r + 1))


def kunneth_betti(n):
    """Coefficients of (1+t)^(2n+2) * (1 + t^2 + ... + t^(2n))."""
    a = [binom(2 * n + 2, k) for k in range(2 * n + 3)]
    out = [0] * (len(a) + 2 * n)
    for j in range(0, 2 * n + 1, 2):
        for k, c in enumerate(a):
            out[k + j] += c
    return out


# -- Bott ------------------------------------------------------------------------


def test_bott_examples():
    for n in range(6):
        assert bott(n, 0, 0, 0) == 1
        for r in range(n + 1):
            assert bott(n, r, r, 0) == 1
    assert bott(2, 1, 0, 2) == 3


def test_bott_known_values():
    # 0 -> Omega^1(3) -> O(2)^3 -> O(3) -> 0 on P^2
    assert bott(2, 1, 0, 3) == 3 * 6 - 10
    # h^1(P^1, O(-3)) = 2 and h^1(P^1, O(2)) = 0
    assert bott(1, 0, 1, -3) == 2
    assert bott(1, 0, 1, 2) == 0
    # h^0(P^2, O(-5)) = 0
    assert bott(2, 0, 0, -5) == 0


@pytest.mark.parametrize("n", range(6))
def test_bott_against_koszul_euler_characteristic(n):
    for r in range(n + 1):
        for l in range(-10, 11):
            values = [bott(n, r, s, l) for s in range(n + 1)]
            assert sum((-1) ** s * v for s, v in enumerate(values)) == koszul_euler_characteristic(n, r, l)
            assert sum(1 for v in values if v) <= 1


@pytest.mark.parametrize("n", range(6))
def test_bott_serre_duality(n):
    for r, s in itertools.product(range(n + 1), repeat=2):
        for l in range(-8, 9):
            assert bott(n, r, s, l) == bott(n, n - r, n - s, -l)


def test_bott_out_of_range():
    assert bott(2, 3, 0, 5) == 0
    assert bott(2, 0, 3, -5) == 0


# -- splitting type ------------------------------------------------------------


def test_splitting_examples():
    assert splitting_type(1, 2, 0).entries == {0: 1, -1: 1}
    for n in range(4):
        assert splitting_type(n, 5, 0).entries[0] == 1
    st = splitting_type(2, 3, 4)
    assert (st.a, st.b) == (0, 1)
    assert st.entries == {0: mu_oracle((2, 3, 4, 0), "enumerate"), 1: mu_oracle((2, 3, 4, 1), "enumerate")}
    assert st.rank == 9


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_splitting_rank_and_endpoints(n, p):
    for t in range(2 * p + 1):
        st = splitting_type(n, p, t)
        assert st.rank == p**n
        assert min(st.entries) == st.a
        assert max(st.entries) == st.b


# -- exterior powers of the Frobenius pullback -----------------------------------


def test_exterior_examples():
    for n, p in [(1, 3), (3, 5), (4, 5)]:
        for s in range(1, n + 1):
            assert h_exterior_frobenius(n, p, 0, 0, s) == 0
    assert h_exterior_frobenius(3, 5, 1, 0, 1) == 52


@pytest.mark.parametrize("n, p", [(2, 3), (3, 5), (4, 7)])
def test_exterior_h0_vanishes_in_low_twists(n, p):
    for r in range(1, n + 1):
        for t in range(p):
            assert h_exterior_frobenius(n, p, r, t, 0) == 0


def test_exterior_h0_untwisted_exterior_power_is_plain_twist():
    # r = 0 gives O(t), whose sections do not vanish
    assert h_exterior_frobenius(2, 5, 0, 2, 0) == binom(4, 2)


@pytest.mark.parametrize("n, p", [(1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (5, 7)])
def test_exterior_middle_degrees(n, p):
    for r in range(1, n):
        for t in range(-2 * p, 2 * p):
            assert h_exterior_frobenius(n, p, r, t, r) == mu(n, p, t, -r)
            for s in range(1, n):
                if s != r:
                    assert h_exterior_frobenius(n, p, r, t, s) == 0


# -- Hodge vector ------------------------------------------------------------------


def test_hodge_examples():
    assert hodge_vector(1, 3).values == (1, 2, 2, 1)
    assert hodge_vector(3, 5).values == (1, 4, 52, 68, 68, 52, 4, 1)
    assert hodge_vector(5, 7).values[:6] == (1, 6, 786, 1251, 6891, 7872)


def test_hodge_requires_large_p():
    with pytest.raises(ParameterError, match="formula requires p >= n\\+1"):
        hodge_vector(5, 5)


@pytest.mark.parametrize("n, p", [(0, 2), (1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (4, 7), (5, 7), (6, 7)])
def test_hodge_two_paths_and_euler_characteristic(n, p):
    hv = hodge_vector(n, p)
    assert hv.values[0] == 1 and hv.values[1] == n + 1
    for j in range(n + 1):
        assert hv.values[2 * j] == h_exterior_frobenius(n, p, j, 0, j)
        assert hv.values[2 * j + 1] == h_exterior_frobenius(n, p, j, 1, j)
    assert hv.euler_characteristic() == 0
    if p - 1 == n + 1:
        assert hv.is_palindromic()


# -- h1, h2, Betti, canonical degree -------------------------------------------------


def test_h1_h2():
    assert all(h1(n, 1) == n + 1 for n in range(10))
    assert h1(3, 2) == 10
    assert h2(3, 5) == 52


def test_h2_small_p_brute_force():
    # valid without p >= n+1
    for n, p in [(3, 2), (4, 3), (2, 2)]:
        brute = sum(1 for v in itertools.product(range(p), repeat=n + 1) if sum(v) == p)
        assert h2(n, p) == brute


def test_betti_of_an_elliptic_curve():
    # n = 0: Y is the curve A itself
    assert [betti(0, i) for i in range(3)] == [1, 2, 1]


@pytest.mark.parametrize("n", range(1, 11))
def test_betti(n):
    assert betti(n, 1) == 2 * n + 2
    assert betti(n, 2) == 2 * n * n + 3 * n + 2
    assert betti(n, 2 * n + 1) == 2 ** (2 * n + 1)
    assert [betti(n, i) for i in range(4 * n + 3)] == kunneth_betti(n)
    assert all(betti(n, i) == betti(n, 4 * n + 2 - i) for i in range(4 * n + 3))
    assert betti(n, -1) == 0 and betti(n, 4 * n + 3) == 0


@pytest.mark.parametrize(
    "n, d, p, m, kod",
    [
        (1, 1, 3, 0, Kodaira.ZERO),
        (3, 1, 5, 0, Kodaira.ZERO),
        (2, 1, 7, 3, Kodaira.N),
        (4, 1, 3, -3, Kodaira.MINUS_INFINITY),
    ],
)
def test_canonical_degree(n, d, p, m, kod):
    fp = FamilyParams(n, d, p)
    assert canonical_degree(fp) == m
    assert kodaira(fp) is kod
    assert fp.dim == 2 * n + 1 and fp.g == n + 1


def test_family_params_validation():
    with pytest.raises(ParameterError):
        FamilyParams(2, 1, 4)
    with pytest.raises(ParameterError):
        FamilyParams(2, 0, 5)

import pytest

from legmat.errors import BadResidueClass, BoundExceeded, ConditionFailed
from legmat.field import divisors, is_prime, legendre, make_field, odd_prime_powers
from legmat.gallery import (
    S_dp, inverse_squares_det, inverse_squares_expected, luo_sun_matrix, luo_sun_report,
    sun_reciprocal_det, sun_reciprocal_expected, wsn_det, wsn_expected, wu_wang_det,
    wu_wang_expected,
)

from oracles import leibniz_det_mod

PRIMES = [p for p in range(3, 200) if is_prime(p)]


def test_sun_small_by_hand():
    # p = 5: [[phi(2)/2, phi(3)/3], [phi(3)/3, phi(4)/4]] = [[2, 3], [3, 4]]
    assert leibniz_det_mod([[2, 3], [3, 4]], 5) == 4
    assert sun_reciprocal_det(5) == 4
    rows = [[legendre(i + j, 7) * pow(i + j, -1, 7) % 7 for j in range(1, 4)] for i in range(1, 4)]
    assert leibniz_det_mod(rows, 7) == 6
    assert sun_reciprocal_det(7) == 6


@pytest.mark.parametrize("p", [p for p in PRIMES if 5 <= p <= 97])
def test_sun_case_split(p):
    assert sun_reciprocal_det(p) == sun_reciprocal_expected(p)


def test_inverse_squares_examples():
    rows = [[pow(i * i + j * j, -1, 7) for j in range(1, 4)] for i in range(1, 4)]
    assert leibniz_det_mod(rows, 7) == 1
    assert inverse_squares_det(7) == 1
    assert inverse_squares_det(11) == 10
    with pytest.raises(BadResidueClass):
        inverse_squares_det(5)


@pytest.mark.parametrize("p", [p for p in PRIMES if p % 4 == 3])
def test_inverse_squares(p):
    assert inverse_squares_det(p) == inverse_squares_expected(p) == (-1) ** ((p + 1) // 4) % p


def test_sdp_examples():
    assert S_dp(7, 3)[0] == 0
    assert S_dp(7, 1)[1] == 1
    for d in range(1, 11):
        if legendre(d, 11) == 1:
            assert S_dp(11, d)[1] == 1
    with pytest.raises(BoundExceeded):
        S_dp(71, 1)


@pytest.mark.parametrize("p", [p for p in PRIMES if p <= 67])
def test_sdp_claims(p):
    for d in range(1, p):
        det, sym = S_dp(p, d)
        if legendre(d, p) == -1:
            assert det == 0
        else:
            assert det != 0 and sym == 1


def test_wsn_f5():
    F = make_field(5)
    b = [1, 2, 3, 4]
    rows = [[pow(x * x - x * y + y * y, -1, 5) for y in b] for x in b]
    assert leibniz_det_mod(rows, 5) == 3
    assert wsn_det(F) == 3
    with pytest.raises(BadResidueClass):
        wsn_det(make_field(7))


@pytest.mark.parametrize("q", [q for q in odd_prime_powers(125) if q % 3 == 2])
def test_wsn_formula(q):
    F = make_field(q)
    assert wsn_det(F) == wsn_expected(F)


def test_wsn_named_values():
    assert wsn_expected(make_field(11)) == 8
    assert wsn_expected(make_field(17)) == 2


def test_wu_wang_examples():
    rows = [[pow(a + b, -1, 7) for b in (1, 2, 4)] for a in (1, 2, 4)]
    assert leibniz_det_mod(rows, 7) == 1
    assert wu_wang_det(7, 2) == 1 == wu_wang_expected(7, 2)
    assert wu_wang_det(11, 2) == (-1) ** 3 * pow(4**5, -1, 11) % 11
    with pytest.raises(ConditionFailed):
        wu_wang_det(5, 2)


@pytest.mark.parametrize("p", [p for p in PRIMES if p <= 97])
def test_wu_wang_formula(p):
    for k in divisors(p - 1):
        if k % 2:
            continue
        try:
            det = wu_wang_det(p, k)
        except ConditionFailed:
            assert ((p - 1) // k) % 2 == 0
            continue
        assert det == wu_wang_expected(p, k)


def test_luo_sun_builder():
    M = luo_sun_matrix(5, 1, 1)
    assert M.dim == 4 and M.is_symmetric()
    # x^(p-2) is x^-1 off zero and 0 at zero
    assert M.entry(0, 0).value == pow(3, -1, 5)
    assert luo_sun_matrix(7, 2, 2).dim == 6
    det, sym = luo_sun_report(7, 2, 2)
    assert sym == legendre(det, 7)
    assert luo_sun_matrix(5, 0, 0).dim == 4

"""Related Legendre-type determinants used as further oracle targets.

Each function builds its matrix and returns the brute-force determinant;
the claimed value is exposed separately (``*_expected``) so callers can
compare the two.
"""

from __future__ import annotations

import numpy as np

from .errors import BadResidueClass, BoundExceeded, ConditionFailed, InvalidK, NotOddPrime
from .field import FieldElement, FieldSpec, is_prime, legendre, make_prime_field
from .combinatorics import half_factorial
from .matrix import IntegerMatrix, SquareMatrix, determinant, integer_determinant

SDP_MAX_P = 67


def _prime_field(p: int) -> FieldSpec:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    return make_prime_field(p)


def _prime_residue(x: FieldElement) -> int:
    if not x.in_prime_field():
        raise AssertionError(f"determinant {x} is not in the prime field")
    return x.value


def sun_reciprocal_matrix(p: int) -> SquareMatrix:
    """[((i+j)/p) / (i+j)] for 1 <= i, j <= (p-1)/2, over F_p."""
    F = _prime_field(p)
    m = (p - 1) // 2
    idx = np.arange(1, m + 1)
    s = (idx[:, None] + idx[None, :]) % p
    # phi(x)/x = x^((p-1)/2) * x^(p-2) = x^((3p-5)/2), and i+j != 0 here
    return SquareMatrix(F, F.vpow(s, (p - 1) // 2 + p - 2))


def sun_reciprocal_det(p: int) -> int:
    if p < 5:
        raise ValueError("need p >= 5")
    return _prime_residue(determinant(sun_reciprocal_matrix(p)))


def sun_reciprocal_expected(p: int) -> int:
    if p % 4 == 1:
        return legendre(2, p) % p
    return half_factorial(p)


def inverse_squares_det(p: int) -> int:
    """det [1/(i^2 + j^2)] over F_p, 1 <= i, j <= (p-1)/2."""
    F = _prime_field(p)
    if p % 4 != 3:
        raise BadResidueClass(f"{p} is not 3 mod 4")
    idx = np.arange(1, (p - 1) // 2 + 1)
    form = (idx[:, None] ** 2 + idx[None, :] ** 2) % p
    return _prime_residue(determinant(SquareMatrix(F, F.vinv(form))))


def inverse_squares_expected(p: int) -> int:
    return 1 if ((p + 1) // 4) % 2 == 0 else p - 1


def sdp_matrix(p: int, d: int) -> IntegerMatrix:
    m = (p - 1) // 2
    return IntegerMatrix(tuple(tuple(legendre(i * i + d * j * j, p) for j in range(1, m + 1))
                               for i in range(1, m + 1)))


def S_dp(p: int, d: int, max_p: int = SDP_MAX_P) -> tuple[int, int]:
    """Exact S(d, p) = det[((i^2 + d j^2)/p)] and the Legendre symbol of -S(d, p)."""
    _prime_field(p)
    if p > max_p:
        raise BoundExceeded(f"p = {p} above the exact-integer bound {max_p}")
    if d % p == 0:
        raise ValueError("p must not divide d")
    det = integer_determinant(sdp_matrix(p, d))
    return det, legendre(-det, p)


def wsn_matrix(spec: FieldSpec) -> SquareMatrix:
    """[1/(b_i^2 - b_i b_j + b_j^2)] over all non-zero b in F_q."""
    if spec.q % 3 != 2:
        raise BadResidueClass(f"q = {spec.q} is not 2 mod 3")
    b = np.arange(1, spec.q, dtype=np.int64)
    bi, bj = b[:, None], b[None, :]
    form = spec.vadd(spec.vsub(spec.vmul(bi, bi), spec.vmul(bi, bj)), spec.vmul(bj, bj))
    return SquareMatrix(spec, spec.vinv(form))


def wsn_det(spec: FieldSpec) -> int:
    return _prime_residue(determinant(wsn_matrix(spec)))


def wsn_expected(spec: FieldSpec) -> int:
    q, p = spec.q, spec.p
    sign = 1 if ((q + 1) // 2) % 2 == 0 else -1
    return sign * pow(2, (q - 2) // 3, p) % p


def kth_power_residues(p: int, k: int) -> list[int]:
    return sorted({pow(x, k, p) for x in range(1, p)})


def wu_wang_det(p: int, k: int) -> int:
    """det [1/(a_i + a_j)] over the k-th power residues 0 < a < p."""
    F = _prime_field(p)
    if k <= 0 or k % 2 or (p - 1) % k:
        raise InvalidK(f"k = {k} must be a positive even divisor of p - 1")
    alpha = kth_power_residues(p, k)
    if p - 1 in alpha:
        raise ConditionFailed(f"-1 is a {k}-th power mod {p}")
    a = np.array(alpha, dtype=np.int64)
    return _prime_residue(determinant(SquareMatrix(F, F.vinv((a[:, None] + a[None, :]) % p))))


def wu_wang_expected(p: int, k: int) -> int:
    m = (p - 1) // k
    sign = 1 if ((m + 1) // 2) % 2 == 0 else -1
    return sign * pow(2 * k % p, -m, p) % p


def luo_sun_matrix(p: int, c: int, d: int) -> SquareMatrix:
    """[(i^2 + c i j + d j^2)^(p-2)] for 1 <= i, j <= p-1, over F_p."""
    F = _prime_field(p)
    idx = np.arange(1, p, dtype=np.int64)
    i, j = idx[:, None], idx[None, :]
    form = (i * i + (c % p) * i * j % p + (d % p) * j * j) % p
    return SquareMatrix(F, F.vpow(form, p - 2))


def luo_sun_report(p: int, c: int, d: int) -> tuple[int, int]:
    """(det S_p(c, d) mod p, its Legendre symbol); no claimed value is checked."""
    det = _prime_residue(determinant(luo_sun_matrix(p, c, d)))
    return det, legendre(det, p)

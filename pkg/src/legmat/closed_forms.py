"""Closed-form determinant values and Legendre symbols for D_k and T_k.

Everything here is integer arithmetic modulo p = char(F_q). Nothing in this
module builds a matrix or takes a determinant; the brute-force side lives in
:mod:`legmat.builders` and :mod:`legmat.matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import binomial_mod_p, trinomial_row
from .errors import BadResidueClass, InvalidK, KMustBeOdd, NotADivisor, QTooSmall
from .field import FieldSpec, is_prime, legendre


@dataclass(frozen=True)
class ClosedFormResult:
    """A predicted determinant image in F_p.

    ``value`` is a residue in [0, p). ``symbol`` is the predicted Legendre
    symbol, or None when the formula does not predict one separately.
    """

    p: int
    value: int | None
    symbol: int | None = None
    components: dict = field(default_factory=dict)

    @property
    def signed(self) -> int | None:
        """``value`` as a representative in (-p/2, p/2]."""
        if self.value is None:
            return None
        return self.value - self.p if self.value > self.p // 2 else self.value


def _sign(e: int, p: int) -> int:
    return 1 if e % 2 == 0 else p - 1


def _check_k(spec: FieldSpec, k: int) -> None:
    if k <= 1 or k > spec.q - 1:
        raise InvalidK(f"need 1 < k <= q - 1, got k = {k}")
    if (spec.q - 1) % k:
        raise NotADivisor(f"k = {k} does not divide q - 1 = {spec.q - 1}")


def _k_power(k: int, p: int) -> int:
    return pow(k % p, k, p)


def w_factors(spec: FieldSpec, k: int) -> list[int]:
    """The k binomial sums whose product is w_k."""
    _check_k(spec, k)
    q, p = spec.q, spec.p
    N = (q - 3) // 2
    out = []
    for s in range(k):
        # floor of a negative numerator gives an empty range
        top = (q - 3 - 2 * s) // (2 * k)
        out.append(sum(binomial_mod_p(N, s + r * k, p) for r in range(top + 1)) % p)
    return out


def w_k(spec: FieldSpec, k: int) -> int:
    result = 1
    for f in w_factors(spec, k):
        result = result * f % spec.p
    return result


def det_Dk_closed(spec: FieldSpec, k: int) -> ClosedFormResult:
    """(-1)^((k+1)(q-3)/2) * w_k * k^k in F_p."""
    q, p = spec.q, spec.p
    w = w_k(spec, k)
    sign = _sign((k + 1) * (q - 3) // 2, p)
    kk = _k_power(k, p)
    value = sign * w * kk % p
    return ClosedFormResult(p, value, legendre(value, p),
                            {"w_k": w, "sign": sign, "k^k": kk})


def s_k(spec: FieldSpec, k: int) -> int:
    _check_k(spec, k)
    if k % 2 == 0:
        raise KMustBeOdd(f"k = {k} is even")
    q, p = spec.q, spec.p
    N = (q - 3) // 2
    total = sum(binomial_mod_p(N, ((2 * r - 1) * k - 1) // 2, p)
                for r in range(1, (q - 1) // (2 * k) + 1))
    return k * total % p


def l_factors(spec: FieldSpec, k: int) -> list[int]:
    """The k trinomial sums whose product is l_k."""
    _check_k(spec, k)
    q, p = spec.q, spec.p
    N = (q - 3) // 2
    row = trinomial_row(N, p)
    out = []
    for s in range(k):
        top = (q - 3 - s) // k
        out.append(sum(row[N - s - k * r] for r in range(top + 1)) % p)
    return out


def l_k(spec: FieldSpec, k: int) -> int:
    result = 1
    for f in l_factors(spec, k):
        result = result * f % spec.p
    return result


def det_Tk_closed(spec: FieldSpec, k: int) -> ClosedFormResult:
    """l_k * k^k in F_p."""
    p = spec.p
    lk = l_k(spec, k)
    kk = _k_power(k, p)
    value = lk * kk % p
    return ClosedFormResult(p, value, legendre(value, p), {"l_k": lk, "k^k": kk})


def tk_singularity_criterion(spec: FieldSpec, k: int) -> tuple[bool, int | None]:
    """Whether some factor of l_k vanishes mod p, with the least such s."""
    for s, f in enumerate(l_factors(spec, k)):
        if f == 0:
            return True, s
    return False, None


def det_Dhalf_closed(spec: FieldSpec) -> ClosedFormResult:
    """det D_{(q-1)/2} through the u / v case split."""
    q, p = spec.q, spec.p
    if q <= 3:
        raise QTooSmall("need q > 3")
    N = (q - 3) // 2
    if q % 4 == 1:
        u = 1
        for s in range((q - 5) // 4 + 1):
            u = u * binomial_mod_p(N, s, p) % p
        value = _sign((q + 3) // 4, p) * u * u % p
        return ClosedFormResult(p, value, legendre(value, p), {"u": u})
    v = 1
    for s in range((q - 7) // 4 + 1):
        v = v * binomial_mod_p(N, s, p) % p
    mid = binomial_mod_p(N, (q - 3) // 4, p)
    value = _sign((q + 5) // 4, p) * mid * v * v % p
    return ClosedFormResult(p, value, legendre(value, p), {"v": v, "binom_mid": mid})


def symbol_Dhalf(p: int, h: int | None = None) -> int:
    """Predicted Legendre symbol of det D_{(p-1)/2} for a prime p > 3.

    ``h`` is the class number h(-p), needed only when p = 3 (mod 4).
    """
    if p <= 3 or not is_prime(p):
        raise ValueError("need a prime p > 3")
    if p % 4 == 1:
        return 1
    if h is None:
        raise ValueError("class number required when p = 3 (mod 4)")
    if h % 2 == 0:
        raise BadResidueClass(f"h(-{p}) = {h} is even")
    return -1 if ((h + 1) // 2) % 2 else 1


def det_Thalf_closed(spec: FieldSpec) -> ClosedFormResult:
    """det T_{(q-1)/2} and its symbol, each evaluated from its own printed formula.

    The value branch omits the k^k factor that det_Tk_closed carries, so the
    two disagree for many q; callers compare each branch separately.
    """
    q, p = spec.q, spec.p
    if q <= 3:
        raise QTooSmall("need q > 3")
    N = (q - 3) // 2
    row = trinomial_row(N, p)
    t = row[0]
    if q % 4 == 1:
        prod = 1
        for s in range((q - 5) // 4 + 1):
            term = (row[N - s] + row[1 + s]) % p
            prod = prod * term * term % p
        symbol = -1 if ((q - 1) // 4) % 2 else 1
        return ClosedFormResult(p, prod, symbol, {"t_n": t})
    prod = t
    for s in range((q - 7) // 4 + 1):
        term = (row[N - s] + row[1 + s]) % p
        prod = prod * term * term % p
    symbol = legendre(t, p) * (-1 if ((q + 5) // 4) % 2 else 1)
    return ClosedFormResult(p, prod, symbol, {"t_n": t})

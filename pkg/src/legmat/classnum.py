"""Class numbers h(-p) for primes p = 3 (mod 4), computed two ways."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .combinatorics import half_factorial
from .errors import BadResidueClass, NonIntegralResult
from .field import is_prime


@dataclass(frozen=True)
class ClassNumberResult:
    p: int
    h_forms: int
    h_dirichlet: int
    mordell_ok: bool


def _check(p: int) -> None:
    if not is_prime(p) or p <= 3:
        raise ValueError(f"need a prime p > 3, got {p}")
    if p % 4 != 3:
        raise BadResidueClass(f"{p} is not 3 mod 4")


def reduced_forms(p: int) -> list[tuple[int, int, int]]:
    """Reduced primitive forms (a, b, c) with b^2 - 4ac = -p."""
    _check(p)
    forms = []
    for a in range(1, isqrt(p // 3) + 1):
        for b in range(-a, a + 1):
            if b % 2 == 0:
                # the discriminant is odd, so b is too
                continue
            num = b * b + p
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return forms


def h_by_reduced_forms(p: int) -> int:
    return len(reduced_forms(p))


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0 by quadratic reciprocity."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def h_by_character_sum(p: int) -> int:
    """h(-p) = sum_{a < p/2} (a/p) / (2 - (2/p))."""
    _check(p)
    total = sum(jacobi(a, p) for a in range(1, (p - 1) // 2 + 1))
    denom = 2 - jacobi(2, p)
    h, rem = divmod(total, denom)
    if rem or h <= 0:
        raise NonIntegralResult(f"character sum {total} / {denom} for p = {p}")
    return h


def mordell_check(p: int) -> bool:
    """((p-1)/2)! = (-1)^((h(-p)+1)/2) mod p."""
    h = h_by_reduced_forms(p)
    expected = 1 if ((h + 1) // 2) % 2 == 0 else p - 1
    return h % 2 == 1 and half_factorial(p) == expected


def class_number(p: int) -> ClassNumberResult:
    return ClassNumberResult(p, h_by_reduced_forms(p), h_by_character_sum(p), mordell_check(p))

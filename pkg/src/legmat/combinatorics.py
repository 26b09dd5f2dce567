"""Binomial and trinomial coefficients modulo a prime."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


def binomial_mod_p(n: int, r: int, p: int) -> int:
    """binom(n, r) mod p by Lucas's theorem; 0 when r < 0 or r > n."""
    if r < 0 or r > n:
        return 0
    result = 1
    while n or r:
        n, nd = divmod(n, p)
        r, rd = divmod(r, p)
        if rd > nd:
            return 0
        result = result * comb(nd, rd) % p
    return result


@dataclass(frozen=True)
class TrinomialRow:
    """Coefficients of (x + 1/x + 1)**n modulo p.

    ``coeffs[i]`` holds the coefficient of x**(i - n). Index with ``row[r]``
    for any integer r; out-of-range r gives 0.
    """

    n: int
    p: int
    coeffs: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        if abs(r) > self.n:
            return 0
        return self.coeffs[r + self.n]

    def __len__(self):
        return len(self.coeffs)


@lru_cache(maxsize=1024)
def trinomial_row(n: int, p: int) -> TrinomialRow:
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 2)
        for i, c in enumerate(row):
            if c:
                nxt[i] += c
                nxt[i + 1] += c
                nxt[i + 2] += c
        row = [c % p for c in nxt]
    return TrinomialRow(n, p, tuple(row))


def trinomial_mod_p(n: int, r: int, p: int) -> int:
    return trinomial_row(n, p)[r]


def central_trinomial(n: int, p: int) -> int:
    """t_n mod p, the coefficient of x**n in (x**2 + x + 1)**n."""
    return trinomial_row(n, p)[0]


def half_factorial(p: int) -> int:
    """((p - 1)/2)! mod p."""
    result = 1
    for j in range(2, (p - 1) // 2 + 1):
        result = result * j % p
    return result

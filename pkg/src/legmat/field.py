"""Finite fields F_q with q = p**n odd.

Elements are stored as integer codes ``c_0 + c_1*p + ... + c_{n-1}*p**(n-1)``
for the residue ``c_0 + c_1*x + ... + c_{n-1}*x**(n-1)`` modulo the field's
monic modulus. The code is canonical, so equal codes mean equal elements, and
the prime subfield F_p is exactly the codes ``0 .. p-1``.

Scalar arithmetic works on Python ints through polynomial reduction. The
``v*`` methods of :class:`FieldSpec` are the vectorized counterparts used by
matrix code; for n > 1 they go through discrete log tables which are built
lazily from the scalar path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import DivisionByZero, FieldOverflow, NotADivisor, NotOddPrime

MAX_P = 2**31
MAX_Q = 10**6


# -- integer helpers ---------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q = p**n for prime p, or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return f[0]


def divisors(n: int) -> list[int]:
    ds = [1]
    for prime, e in factorize(n):
        ds = [d * prime**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion, as -1, 0 or 1."""
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


# -- polynomials over F_p (coefficient lists, lowest degree first) -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    m = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(m)])


def _poly_mod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    _trim(a)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod([c % p for c in prod], f, p)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial f (lowest degree first) over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]

    def frob(d):
        # x**(p**d) mod f by repeated p-th powers
        r = x
        for _ in range(d):
            r = _poly_powmod(r, p, f, p)
        return r

    if _poly_sub(frob(n), _poly_mod(x, f, p), p):
        return False
    for ell, _ in factorize(n):
        g = _poly_gcd(f, _poly_sub(frob(n // ell), x, p), p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n, candidates ordered by (c_0, ..., c_{n-1})."""
    for tail in itertools.product(range(p), repeat=n):
        f = list(tail) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- fields --------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of F_q.

    ``modulus`` is the monic modulus (lowest degree first), ``None`` for prime
    fields. ``generator`` is the code of the fixed primitive element ``g``.
    """

    p: int
    n: int
    q: int
    modulus: tuple[int, ...] | None
    generator: int
    factorization: tuple[tuple[int, int], ...]

    def __repr__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    # element construction

    @property
    def g(self) -> FieldElement:
        return FieldElement(self, self.generator)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __call__(self, value: int) -> FieldElement:
        """Image of a rational integer in F_q."""
        return FieldElement(self, value % self.p)

    def element(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return FieldElement(self, self.encode(c % self.p for c in coeffs))

    def elements(self):
        """All elements in canonical order (coefficient tuples ascending)."""
        for t in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, self.encode(t))

    def encode(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c
        return code

    def decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    # scalar arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        return self.encode((x + y) % self.p for x, y in zip(self.decode(a), self.decode(b)))

    def neg(self, a: int) -> int:
        if self.n == 1:
            return -a % self.p
        return self.encode(-x % self.p for x in self.decode(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        prod = _poly_mulmod(self.decode(a), self.decode(b), list(self.modulus), self.p)
        return self.encode(prod)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.n == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    # vectorized arithmetic on int64 code arrays

    @cached_property
    def _powers(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        exp = np.empty(self.q - 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul(x, self.generator)
        return exp, log

    def _digits(self, a):
        return (a[..., None] // self._powers) % self.p

    def _undigits(self, d):
        return (d * self._powers).sum(axis=-1)

    def vadd(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return self._undigits((self._digits(a) + self._digits(b)) % self.p)

    def vsub(self, a, b):
        if self.n == 1:
            return (a - b) % self.p
        return self._undigits((self._digits(a) - self._digits(b)) % self.p)

    def vneg(self, a):
        return self.vsub(np.zeros_like(a), a)

    def vmul(self, a, b):
        if self.n == 1:
            return (a * b) % self.p
        exp, log = self._tables
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = exp[(log[a] + log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e: int):
        """Elementwise a**e with 0**0 = 1."""
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if self.n == 1:
            result = np.ones_like(a)
            base = a % self.p
            while e:
                if e & 1:
                    result = result * base % self.p
                base = base * base % self.p
                e >>= 1
            return result
        exp, log = self._tables
        out = exp[(log[a] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def vinv(self, a):
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero("inverse of zero")
        return self.vpow(a, self.q - 2)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.decode(self.value)

    def in_prime_field(self) -> bool:
        return self.value < self.field.p

    @property
    def residue(self) -> int:
        """The element as an integer in [0, p); only for prime-subfield elements."""
        if not self.in_prime_field():
            raise ValueError(f"{self} is not in the prime field")
        return self.value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.field.n == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def power(a: FieldElement, e: int) -> FieldElement:
    """a**e by square-and-multiply; power(0, 0) is 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a ** e


# -- construction ----------------------------------------------------------------

def _check_bounds(p: int, n: int) -> None:
    if p >= MAX_P or p**n > MAX_Q:
        raise FieldOverflow(f"q = {p}^{n} exceeds the supported bound q <= {MAX_Q}")


def find_generator(p: int, n: int, modulus, factorization) -> int:
    """Code of the first element, in canonical order, of order q - 1."""
    q = p**n
    probe = FieldSpec(p, n, q, modulus, 1, factorization)
    exponents = [(q - 1) // ell for ell, _ in factorization]
    for el in probe.elements():
        if el.value == 0:
            continue
        if all(probe.pow(el.value, e) != 1 for e in exponents):
            return el.value
    raise AssertionError("no generator found")  # unreachable


@lru_cache(maxsize=None)
def make_prime_field(p: int) -> FieldSpec:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    _check_bounds(p, 1)
    fac = factorize(p - 1)
    return FieldSpec(p, 1, p, None, find_generator(p, 1, None, fac), fac)


@lru_cache(maxsize=None)
def make_extension_field(p: int, n: int) -> FieldSpec:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return make_prime_field(p)
    _check_bounds(p, n)
    modulus = first_irreducible(p, n)
    q = p**n
    fac = factorize(q - 1)
    return FieldSpec(p, n, q, modulus, find_generator(p, n, modulus, fac), fac)


def make_field(q: int) -> FieldSpec:
    """F_q for an odd prime power q."""
    pn = prime_power(q)
    if pn is None or pn[0] == 2:
        raise NotOddPrime(f"{q} is not a power of an odd prime")
    if q > MAX_Q:
        raise FieldOverflow(f"q = {q} exceeds the supported bound q <= {MAX_Q}")
    return make_extension_field(*pn)


def odd_prime_powers(q_max: int) -> list[int]:
    """All odd prime powers q <= q_max, ascending."""
    return [q for q in range(3, q_max + 1, 2) if prime_power(q) is not None]


# -- characters, subgroups, power sums -------------------------------------------

def quadratic_character(a: FieldElement) -> int:
    if a.value == 0:
        return 0
    t = a.field.pow(a.value, (a.field.q - 1) // 2)
    if t == 1:
        return 1
    assert t == a.field.neg(1), "Euler criterion produced neither 1 nor -1"
    return -1


def _subgroup_codes(spec: FieldSpec, k: int) -> list[int]:
    if k < 1 or (spec.q - 1) % k:
        raise NotADivisor(f"k = {k} does not divide q - 1 = {spec.q - 1}")
    step = spec.pow(spec.generator, (spec.q - 1) // k)
    codes, x = [], 1
    for _ in range(k):
        codes.append(x)
        x = spec.mul(x, step)
    return codes


def subgroup_Uk(spec: FieldSpec, k: int) -> list[FieldElement]:
    """U_k = {x : x^k = 1} as the powers g^((q-1)/k * i), i = 0..k-1."""
    return [FieldElement(spec, c) for c in _subgroup_codes(spec, k)]


def power_sum(spec: FieldSpec, r: int) -> FieldElement:
    """Direct sum of x**r over every x in F_q."""
    if r < 1:
        raise ValueError("r must be positive")
    total = 0
    for x in range(spec.q):
        total = spec.add(total, spec.pow(x, r))
    return FieldElement(spec, total)

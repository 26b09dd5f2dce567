"""The matrices D_k and T_k over U_k, and the circulant vector behind D_k."""

from __future__ import annotations

import numpy as np

from .errors import InvalidK, KMustBeOdd, NotADivisor
from .field import FieldElement, FieldSpec, _subgroup_codes
from .matrix import SquareMatrix


def _check_k(spec: FieldSpec, k: int) -> None:
    if k <= 1 or k > spec.q - 1:
        raise InvalidK(f"need 1 < k <= q - 1, got k = {k}")
    if (spec.q - 1) % k:
        raise NotADivisor(f"k = {k} does not divide q - 1 = {spec.q - 1}")


def _codes(spec: FieldSpec, k: int, elements) -> np.ndarray:
    _check_k(spec, k)
    if elements is None:
        return np.array(_subgroup_codes(spec, k), dtype=np.int64)
    codes = np.array([e.value for e in elements], dtype=np.int64)
    if len(codes) != k:
        raise ValueError("elements must list all of U_k")
    return codes


def build_Dk(spec: FieldSpec, k: int, elements: list[FieldElement] | None = None) -> SquareMatrix:
    """D_k = [(a_i + a_j)^((q-3)/2)] over U_k.

    ``elements`` overrides the default ordering a_i = g^((q-1)/k * (i-1)); it
    must be a permutation of U_k.
    """
    a = _codes(spec, k, elements)
    sums = spec.vadd(a[:, None], a[None, :])
    return SquareMatrix(spec, spec.vpow(sums, (spec.q - 3) // 2))


def build_Tk(spec: FieldSpec, k: int, elements: list[FieldElement] | None = None) -> SquareMatrix:
    """T_k = [(a_i^2 + a_i a_j + a_j^2)^((q-3)/2)] over U_k."""
    a = _codes(spec, k, elements)
    ai, aj = a[:, None], a[None, :]
    form = spec.vadd(spec.vadd(spec.vmul(ai, ai), spec.vmul(ai, aj)), spec.vmul(aj, aj))
    return SquareMatrix(spec, spec.vpow(form, (spec.q - 3) // 2))


def build_circulant_b(spec: FieldSpec, k: int) -> list[FieldElement]:
    """b_i = (1 + g^(n i))^((q-3)/2) g^(m i) (-1)^i for odd k, n = (q-1)/k, m = n/2."""
    _check_k(spec, k)
    if k % 2 == 0:
        raise KMustBeOdd(f"k = {k} is even")
    n = (spec.q - 1) // k
    m = n // 2
    g = spec.g
    e = (spec.q - 3) // 2
    out = []
    for i in range(k):
        b = (1 + g ** (n * i)) ** e * g ** (m * i)
        out.append(-b if i % 2 else b)
    return out

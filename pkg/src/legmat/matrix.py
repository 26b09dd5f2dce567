"""Dense square matrices over F_q and over the integers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldElement, FieldSpec


class SquareMatrix:
    """A k x k matrix over a finite field, stored as an int64 array of codes.

    The array is read-only; determinants work on a copy.
    """

    __slots__ = ("field", "codes")

    def __init__(self, field: FieldSpec, codes):
        codes = np.array(codes, dtype=np.int64)
        if codes.ndim != 2 or codes.shape[0] != codes.shape[1] or codes.shape[0] == 0:
            raise ValueError(f"expected a non-empty square array, got shape {codes.shape}")
        if codes.min() < 0 or codes.max() >= field.q:
            raise ValueError("entry codes out of range for the field")
        codes.flags.writeable = False
        self.field = field
        self.codes = codes

    @classmethod
    def from_elements(cls, field: FieldSpec, rows) -> SquareMatrix:
        """Build from nested rows of FieldElements or integers."""
        def code(x):
            if isinstance(x, FieldElement):
                if x.field != field:
                    raise ValueError("entry from a different field")
                return x.value
            return x % field.p
        return cls(field, [[code(x) for x in row] for row in rows])

    @property
    def dim(self) -> int:
        return self.codes.shape[0]

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, int(self.codes[i, j]))

    def rows(self) -> list[list[FieldElement]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.codes, self.codes.T))

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.codes, other.codes)

    def __repr__(self):
        return f"SquareMatrix({self.field!r}, dim={self.dim})"


def determinant(M: SquareMatrix) -> FieldElement:
    """Exact determinant by Gaussian elimination with first-non-zero pivoting."""
    F = M.field
    A = M.codes.copy()
    k = A.shape[0]
    det = 1
    negate = False
    for i in range(k):
        nz = np.flatnonzero(A[i:, i])
        if nz.size == 0:
            return F.zero
        piv = i + int(nz[0])
        if piv != i:
            A[[i, piv]] = A[[piv, i]]
            negate = not negate
        pivot = int(A[i, i])
        det = F.mul(det, pivot)
        if i + 1 < k:
            factors = F.vmul(A[i + 1:, i], F.inv(pivot))
            A[i + 1:, i:] = F.vsub(A[i + 1:, i:], F.vmul(factors[:, None], A[i, i:][None, :]))
    if negate:
        det = F.neg(det)
    return FieldElement(F, det)


def build_circulant(b: list[FieldElement]) -> SquareMatrix:
    """C(b_0, ..., b_{s-1}) with (i, j) entry b[(j - i) mod s]."""
    if not b:
        raise ValueError("need at least one entry")
    field = b[0].field
    vals = np.array([x.value for x in b], dtype=np.int64)
    s = len(b)
    idx = (np.arange(s)[None, :] - np.arange(s)[:, None]) % s
    return SquareMatrix(field, vals[idx])


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.entries)
        if k == 0 or any(len(row) != k for row in self.entries):
            raise ValueError("expected a non-empty square matrix")
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))

    @property
    def dim(self) -> int:
        return len(self.entries)


def integer_determinant(M: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(row) for row in M.entries]
    k = len(A)
    sign = 1
    prev = 1
    for i in range(k - 1):
        if A[i][i] == 0:
            for r in range(i + 1, k):
                if A[r][i] != 0:
                    A[i], A[r] = A[r], A[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = A[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                A[r][c] = (A[r][c] * piv - A[r][i] * A[i][c]) // prev
            A[r][i] = 0
        prev = piv
    return sign * A[k - 1][k - 1]

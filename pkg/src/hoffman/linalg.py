"""Exact and floating spectral queries on small symmetric integer matrices.

Floating eigenvalues are only advisory. Every decision about the smallest
eigenvalue (in particular the boundary case ``lambda_min == -3``) goes through
:func:`cmp_lambda_min`, which runs a pivoted LDL^T elimination over exact
rationals.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational

import numpy as np


class LambdaOrder(enum.Enum):
    """Exact trichotomy of an extreme eigenvalue against a rational threshold."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def __str__(self) -> str:
        return self.value


def as_symmetric_int(m) -> np.ndarray:
    """Coerce ``m`` to a square symmetric ``int64`` array, or raise ``ValueError``."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.issubdtype(a.dtype, np.integer):
        if not np.all(np.equal(np.mod(a, 1), 0)):
            raise ValueError("matrix entries must be integers")
    a = a.astype(np.int64)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def _shifted_rows(m, r) -> list[list[int]]:
    # q*(m - r I) with r = p/q; scaling by q > 0 preserves every sign question below
    r = Fraction(r)
    a = as_symmetric_int(m)
    p, q = r.numerator, r.denominator
    n = a.shape[0]
    return [[q * int(a[i, j]) - (p if i == j else 0) for j in range(n)] for i in range(n)]


def psd_status(rows: list[list]) -> tuple[bool, bool]:
    """Return ``(positive_semidefinite, singular)`` for an exact symmetric matrix.

    Symmetric Gaussian elimination with diagonal pivoting. A negative diagonal
    entry, or a zero diagonal entry in a row that is not identically zero,
    certifies that the matrix is not PSD. Zero rows are dropped and recorded as
    singular directions.
    """
    s = [[Fraction(v) for v in row] for row in rows]
    active = list(range(len(s)))
    singular = False
    while active:
        if any(s[i][i] < 0 for i in active):
            return False, singular
        zero_rows = [i for i in active if s[i][i] == 0]
        for i in zero_rows:
            if any(s[i][j] != 0 for j in active):
                return False, singular
        if zero_rows:
            singular = True
            active = [i for i in active if s[i][i] != 0]
            continue
        k = active[0]
        pivot = s[k][k]
        rest = active[1:]
        row_k = s[k]
        for i in rest:
            f = row_k[i]
            if f == 0:
                continue
            f = f / pivot
            row_i = s[i]
            for j in rest:
                if row_k[j]:
                    row_i[j] -= f * row_k[j]
        active = rest
    return True, singular


def cmp_lambda_min(m, r) -> LambdaOrder:
    """Compare the smallest eigenvalue of the symmetric integer matrix ``m`` with ``r``.

    ``r`` may be an int, a :class:`fractions.Fraction` or anything
    ``Fraction`` accepts exactly (floats are rejected to avoid silent rounding).

    >>> cmp_lambda_min([[-2, -1], [-1, -2]], -3)
    <LambdaOrder.EQUAL: 'equal'>
    """
    if isinstance(r, float):
        raise TypeError("threshold must be exact (int or Fraction), not float")
    if not isinstance(r, (int, Rational, str)):
        r = Fraction(r)
    if np.asarray(m).shape[0] == 0:
        raise ValueError("empty matrix has no eigenvalues")
    psd, singular = psd_status(_shifted_rows(m, r))
    if not psd:
        return LambdaOrder.LESS
    return LambdaOrder.EQUAL if singular else LambdaOrder.GREATER


def cmp_lambda_max(m, r) -> LambdaOrder:
    """Exact trichotomy of ``lambda_max(m)`` against ``r`` (via ``-m`` and ``-r``)."""
    order = cmp_lambda_min(-as_symmetric_int(m), -Fraction(r))
    return {LambdaOrder.LESS: LambdaOrder.GREATER,
            LambdaOrder.GREATER: LambdaOrder.LESS,
            LambdaOrder.EQUAL: LambdaOrder.EQUAL}[order]


def exact_rank(rows) -> int:
    """Rank of an integer (or rational) matrix by fraction-free Bareiss elimination."""
    a = [[int(v) if not isinstance(v, Fraction) else v for v in row] for row in rows]
    if not a or not a[0]:
        return 0
    if any(isinstance(v, Fraction) for row in a for v in row):
        den = 1
        for row in a:
            for v in row:
                if isinstance(v, Fraction):
                    den = den * v.denominator // np.gcd(den, v.denominator)
        a = [[int(v * den) for v in row] for row in a]
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, n_rows):
            for j in range(col + 1, n_cols):
                a[i][j] = (p * a[i][j] - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def exact_det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [[int(v) for v in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def eigen_multiplicity_at(m, r) -> int:
    """Dimension of the kernel of ``m - r I``, computed exactly."""
    rows = _shifted_rows(m, r)
    return len(rows) - exact_rank(rows)


def lambda_extremes_float(m) -> tuple[float, float]:
    """Floating (min, max) eigenvalues; reporting and pruning only."""
    a = as_symmetric_int(m)
    if a.shape[0] == 0:
        raise ValueError("empty matrix has no eigenvalues")
    w = np.linalg.eigvalsh(a.astype(float))
    return float(w[0]), float(w[-1])


def lambda_min_algebraic(m):
    """``lambda_min`` as an exact real algebraic number (a sympy ``CRootOf``).

    Two such values compare exactly with ``<``, ``==`` and friends, which is
    what comparing eigenvalues of different matrices needs.
    """
    import sympy

    a = as_symmetric_int(m)
    if a.shape[0] == 0:
        raise ValueError("empty matrix has no eigenvalues")
    x = sympy.Symbol("x")
    poly = sympy.Matrix(a.tolist()).charpoly(x).as_expr()
    return sympy.CRootOf(poly, 0)

"""Exact and numeric linear algebra.

ExactMatrix is a dense row-major matrix over one of the exact fields
(Gaussian rationals or rational functions); determinants use Bareiss-style
fraction-free elimination, rank and pivot columns use deterministic
left-to-right elimination.  NumericMatrix wraps complex double precision
arrays for the numeric oracles and the spectral-split path.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
import scipy.linalg

from .errors import DimensionError, SplitTooClose
from .scalars import QI_FIELD, GaussianField, RationalFunctionField


class ExactMatrix:
    """Dense matrix over an exact field."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries: Sequence, field):
        if len(entries) != rows * cols:
            raise DimensionError("entry count does not match rows*cols")
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = [field.coerce(e) for e in entries]

    # -- constructors -----------------------------------------------------
    @staticmethod
    def from_rows(rows: Sequence[Sequence], field) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise DimensionError("ragged rows")
            flat.extend(row)
        return ExactMatrix(r, c, flat, field)

    @staticmethod
    def zeros(rows: int, cols: int, field) -> "ExactMatrix":
        z = field.zero()
        return ExactMatrix(rows, cols, [z] * (rows * cols), field)

    @staticmethod
    def identity(n: int, field) -> "ExactMatrix":
        m = ExactMatrix.zeros(n, n, field)
        for i in range(n):
            m[i, i] = field.one()
        return m

    # -- access -----------------------------------------------------------
    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def __setitem__(self, key, value):
        i, j = key
        self.entries[i * self.cols + j] = self.field.coerce(value)

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> list:
        return [self[i, j] for i in range(self.rows)]

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, list(self.entries), self.field)

    def columns_matrix(self, js: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            self.rows, len(js), [self[i, j] for i in range(self.rows) for j in js], self.field
        )

    # -- algebra ------------------------------------------------------------
    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError("matrix product dimension mismatch")
        out = ExactMatrix.zeros(self.rows, other.cols, self.field)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self[i, k]
                if _is_zero(a):
                    continue
                for j in range(other.cols):
                    b = other[k, j]
                    if _is_zero(b):
                        continue
                    out[i, j] = out[i, j] + a * b
        return out

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("matrix sum dimension mismatch")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.field
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.field
        )

    def is_zero(self) -> bool:
        return all(_is_zero(e) for e in self.entries)

    def map(self, f: Callable) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [f(e) for e in self.entries], self.field)

    def to_numeric(self, point: Sequence[complex] | None = None) -> "NumericMatrix":
        def conv(e):
            if isinstance(self.field, RationalFunctionField):
                return e.eval_complex(point if point is not None else [])
            return e.to_complex()

        return NumericMatrix(np.array([[conv(self[i, j]) for j in range(self.cols)] for i in range(self.rows)], dtype=complex).reshape(self.rows, self.cols))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __repr__(self):
        body = "; ".join(" ".join(repr(self[i, j]) for j in range(self.cols)) for i in range(self.rows))
        return f"ExactMatrix[{self.rows}x{self.cols}: {body}]"


def _is_zero(e) -> bool:
    return e.is_zero()


def det_exact(m: ExactMatrix):
    """Exact determinant via Bareiss-style elimination with row pivoting.

    The 0x0 determinant is 1 (empty product convention).
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    field = m.field
    if n == 0:
        return field.one()
    a = [m.row(i) for i in range(n)]
    sign = 1
    prev = field.one()
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not _is_zero(a[r][k])), None)
        if piv is None:
            return field.zero()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = field.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _echelon(m: ExactMatrix) -> tuple[list[list], list[int]]:
    """Row echelon form (in place on a copy); returns (rows, pivot column list)."""
    a = [m.row(i) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for j in range(m.cols):
        piv = next((i for i in range(r, m.rows) if not _is_zero(a[i][j])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = m.field.one() / a[r][j]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and not _is_zero(a[i][j]):
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank_exact(m: ExactMatrix) -> int:
    """Rank over the fraction field of the entry ring."""
    return len(_echelon(m)[1])


def pivot_columns(m: ExactMatrix) -> list[int]:
    """Lexicographically-first column indices spanning the column space."""
    return _echelon(m)[1]


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right kernel, one vector per free column."""
    a, pivots = _echelon(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for j in free:
        v = [m.field.zero()] * m.cols
        v[j] = m.field.one()
        for r, pj in enumerate(pivots):
            v[pj] = -a[r][j]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# numeric lane
# ---------------------------------------------------------------------------


class NumericMatrix:
    """Complex double-precision matrix; all entries must be finite."""

    __slots__ = ("array",)

    def __init__(self, array):
        arr = np.asarray(array, dtype=complex)
        if arr.ndim != 2:
            raise DimensionError("NumericMatrix expects a 2-d array")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("non-finite entries")
        self.array = arr

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @staticmethod
    def identity(n: int) -> "NumericMatrix":
        return NumericMatrix(np.eye(n, dtype=complex))

    @staticmethod
    def zeros(rows: int, cols: int) -> "NumericMatrix":
        return NumericMatrix(np.zeros((rows, cols), dtype=complex))

    def __mul__(self, other: "NumericMatrix") -> "NumericMatrix":
        return NumericMatrix(self.array @ other.array)

    def transpose(self) -> "NumericMatrix":
        return NumericMatrix(self.array.T)

    def norm(self) -> float:
        return float(np.linalg.norm(self.array)) if self.array.size else 0.0

    def __repr__(self):
        return f"NumericMatrix({self.array!r})"


def det_numeric(m: NumericMatrix) -> complex:
    """Determinant via pivoted LU; 0x0 matrices have determinant 1."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(m.array))


def rank_numeric(m: NumericMatrix, tol: float | None = None) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(np.linalg.matrix_rank(m.array, tol=tol))


def eigen_split(m: NumericMatrix, radius: float) -> tuple[NumericMatrix, NumericMatrix]:
    """Complementary spectral projectors of m for |lambda| < radius and > radius.

    Uses a sorted complex Schur form; the off-diagonal coupling is removed by
    a Sylvester solve.  Raises SplitTooClose when an eigenvalue is within
    1e-8 * ||m|| of the splitting circle.
    """
    if m.rows != m.cols:
        raise DimensionError("eigen_split expects a square matrix")
    if radius <= 0:
        raise ValueError("radius must be positive")
    n = m.rows
    if n == 0:
        return NumericMatrix.zeros(0, 0), NumericMatrix.zeros(0, 0)
    scale = max(m.norm(), 1.0)
    eigs = np.linalg.eigvals(m.array)
    if np.min(np.abs(np.abs(eigs) - radius)) < 1e-8 * scale:
        raise SplitTooClose(
            f"eigenvalue within 1e-8*||m|| of the circle |lambda| = {radius}"
        )
    t, q, sdim = scipy.linalg.schur(m.array, output="complex", sort=lambda lam: abs(lam) < radius)
    k = int(sdim)
    if k == 0:
        return NumericMatrix.zeros(n, n), NumericMatrix.identity(n)
    if k == n:
        return NumericMatrix.identity(n), NumericMatrix.zeros(n, n)
    t11 = t[:k, :k]
    t22 = t[k:, k:]
    t12 = t[:k, k:]
    # T11 R - R T22 = T12
    r = scipy.linalg.solve_sylvester(t11, -t22, t12)
    block = np.zeros((n, n), dtype=complex)
    block[:k, :k] = np.eye(k)
    block[:k, k:] = r
    p_small = q @ block @ q.conj().T
    p_large = np.eye(n) - p_small
    for p in (p_small, p_large):
        if np.linalg.norm(p @ p - p) > 1e-8 * max(1.0, np.linalg.norm(p) ** 2):
            raise SplitTooClose("projector residual too large; spectrum too close to circle")
        if np.linalg.norm(p @ m.array - m.array @ p) > 1e-8 * scale * max(1.0, np.linalg.norm(p)):
            raise SplitTooClose("projector does not commute with the matrix within tolerance")
    return NumericMatrix(p_small), NumericMatrix(p_large)


def invariant_subspace_basis(m: NumericMatrix, radius: float) -> np.ndarray:
    """Orthonormal basis (columns) of the sum of generalized eigenspaces with
    |lambda| < radius, from the sorted Schur form."""
    if m.rows == 0:
        return np.zeros((0, 0), dtype=complex)
    _, q, sdim = scipy.linalg.schur(m.array, output="complex", sort=lambda lam: abs(lam) < radius)
    return q[:, : int(sdim)]

"""The variety of cochain complexes and its torsion functions.

A CochainComplex is a shape vector (k_0, ..., k_n) together with
differentials d^i of size k_{i+1} x k_i satisfying d^{i+1} d^i = 0,
over an exact field or over complex doubles.  This module provides
admissibility of shapes, Betti numbers, the dimension formula for the
strata, Milnor torsion, the determinant-Laplacian torsion, the singular
locus test, and the finite spectral-split identity.

Sign convention for the Milnor torsion: with b_i the pivot columns of
d^{i-1} and b-bar_{i+1} the standard-basis lifts of the pivot columns of
d^i,

    tau(C) = - prod_i det[b_i, b-bar_{i+1}]^{(-1)^{i+1}}.

The overall minus sign pins Turaev's undetermined prefactor at N = 0; the
exponent direction is fixed so that tau(0 -> Q --c--> Q -> 0) = -c and
tau^2 equals the determinant-Laplacian torsion s_torsion below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AdmissibilityError, DimensionError, NotAcyclic, OnSigma
from .linalg import (
    ExactMatrix,
    NumericMatrix,
    det_exact,
    det_numeric,
    eigen_split,
    invariant_subspace_basis,
    pivot_columns,
    rank_exact,
    rank_numeric,
)
from .scalars import QI_FIELD

NUMERIC_D2_TOL = 1e-10
NUMERIC_RANK_TOL = 1e-9


@dataclass(frozen=True)
class Shape:
    """String of non-negative integers, one per degree."""

    k: tuple[int, ...]

    def __init__(self, k: Sequence[int]):
        k = tuple(int(x) for x in k)
        if len(k) < 1:
            raise ValueError("shape must have length >= 1")
        if any(x < 0 for x in k):
            raise ValueError("shape entries must be non-negative")
        object.__setattr__(self, "k", k)

    def __len__(self):
        return len(self.k)

    def __getitem__(self, i):
        return self.k[i]

    def __iter__(self):
        return iter(self.k)


@dataclass(frozen=True)
class BettiString:
    """Cohomology dimensions, paired with a shape of the same length."""

    b: tuple[int, ...]

    def __init__(self, b: Sequence[int]):
        b = tuple(int(x) for x in b)
        if any(x < 0 for x in b):
            raise ValueError("Betti numbers must be non-negative")
        object.__setattr__(self, "b", b)

    def __len__(self):
        return len(self.b)

    def __getitem__(self, i):
        return self.b[i]

    def __iter__(self):
        return iter(self.b)


def is_admissible(k: Shape | Sequence[int]) -> bool:
    """True iff the full alternating sum vanishes and every truncated
    alternating sum (anchored with + at the top index) is non-negative."""
    ks = list(k.k if isinstance(k, Shape) else k)
    n = len(ks) - 1
    r = 0
    for i, ki in enumerate(ks):
        r = ki - r
        if i <= n - 1 and r < 0:
            return False
    return r == 0


def expected_ranks(k: Shape | Sequence[int]) -> list[int]:
    """Ranks r_i = sum_{j<=i} (-1)^{i-j} k_j forced by acyclicity (r_{-1}=0)."""
    ks = list(k.k if isinstance(k, Shape) else k)
    out = []
    r = 0
    for ki in ks:
        r = ki - r
        out.append(r)
    return out


def dim_Db(k: Shape | Sequence[int], b: BettiString | Sequence[int]) -> int:
    """Dimension of the stratum of complexes of shape k with Betti string b."""
    ks = list(k.k if isinstance(k, Shape) else k)
    bs = list(b.b if isinstance(b, BettiString) else b)
    if len(ks) != len(bs):
        raise AdmissibilityError("shape and Betti string lengths differ")
    diff = [x - y for x, y in zip(ks, bs)]
    if any(d < 0 for d in diff) or not is_admissible(diff):
        raise AdmissibilityError(f"(k, b) = ({ks}, {bs}) is not admissible")
    total = 0
    for j in range(len(ks)):
        inner = sum((-1) ** (i + j) * diff[i] for i in range(j + 1))
        total += diff[j] * (ks[j] - inner)
    return total


class CochainComplex:
    """Shape plus differentials; d^{i+1} d^i = 0 is checked on construction.

    diffs[i] maps degree i to degree i+1 and has size k_{i+1} x k_i.  The
    entries are either all ExactMatrix over one field or all NumericMatrix.
    """

    def __init__(self, shape: Shape | Sequence[int], diffs: Sequence):
        self.shape = shape if isinstance(shape, Shape) else Shape(shape)
        ks = self.shape.k
        if len(diffs) != len(ks) - 1:
            raise DimensionError("need one differential per consecutive degree pair")
        self.diffs = list(diffs)
        self.numeric = any(isinstance(d, NumericMatrix) for d in self.diffs)
        if self.numeric and not all(isinstance(d, NumericMatrix) for d in self.diffs):
            raise TypeError("cannot mix exact and numeric differentials")
        for i, d in enumerate(self.diffs):
            if (d.rows, d.cols) != (ks[i + 1], ks[i]):
                raise DimensionError(
                    f"d^{i} has size {d.rows}x{d.cols}, expected {ks[i+1]}x{ks[i]}"
                )
        self.field = None if self.numeric else (self.diffs[0].field if self.diffs else QI_FIELD)
        if not self.numeric:
            for d in self.diffs:
                if d.field != self.field:
                    raise TypeError("differentials over different fields")
        self._check_d2()

    def _check_d2(self):
        for i in range(len(self.diffs) - 1):
            a, b = self.diffs[i + 1], self.diffs[i]
            if self.numeric:
                if a.rows == 0 or b.cols == 0 or a.cols == 0:
                    continue
                prod = a.array @ b.array
                # relative tolerance with a unit-scale floor: differentials that
                # vanish up to round-off must still pass
                bound = NUMERIC_D2_TOL * max(a.norm() * b.norm(), 1.0)
                if np.linalg.norm(prod) > bound:
                    raise DimensionError(f"d^{i+1} d^{i} != 0 (||prod|| = {np.linalg.norm(prod):.3e})")
            else:
                if not (a * b).is_zero():
                    raise DimensionError(f"d^{i+1} d^{i} != 0")

    @property
    def degrees(self) -> int:
        return len(self.shape)

    def differential(self, i: int):
        """d^i for any i, with empty matrices outside the support."""
        ks = self.shape.k
        if 0 <= i < len(self.diffs):
            return self.diffs[i]
        rows = ks[i + 1] if 0 <= i + 1 < len(ks) else 0
        cols = ks[i] if 0 <= i < len(ks) else 0
        if self.numeric:
            return NumericMatrix.zeros(rows, cols)
        return ExactMatrix.zeros(rows, cols, self.field)

    def ranks(self) -> list[int]:
        """Ranks of d^0, ..., d^{n-1} over the fraction field."""
        if self.numeric:
            return [rank_numeric(d) for d in self.diffs]
        return [rank_exact(d) for d in self.diffs]

    def laplacians(self) -> list:
        """P_i = d^{i-1} (d^{i-1})^t + (d^i)^t d^i with the plain transpose."""
        out = []
        for i in range(self.degrees):
            dprev = self.differential(i - 1)
            dcur = self.differential(i)
            if self.numeric:
                n = self.shape[i]
                p = np.zeros((n, n), dtype=complex)
                if dprev.cols:
                    p += dprev.array @ dprev.array.T
                if dcur.rows:
                    p += dcur.array.T @ dcur.array
                out.append(NumericMatrix(p))
            else:
                p = dprev * dprev.transpose() + dcur.transpose() * dcur
                out.append(p)
        return out


def betti(c: CochainComplex) -> BettiString:
    """b_i = k_i - rank d^i - rank d^{i-1}."""
    ranks = c.ranks()
    n = c.degrees
    out = []
    for i in range(n):
        r_prev = ranks[i - 1] if i - 1 >= 0 else 0
        r_cur = ranks[i] if i < len(ranks) else 0
        out.append(c.shape[i] - r_prev - r_cur)
    return BettiString(out)


def is_acyclic(c: CochainComplex) -> bool:
    return all(b == 0 for b in betti(c))


def milnor_torsion(c: CochainComplex):
    """Milnor torsion of an acyclic complex (see module docstring for the
    sign and direction convention).  Exact complexes give exact scalars,
    numeric complexes give complex numbers.
    """
    if c.numeric:
        return _milnor_torsion_numeric(c)
    field = c.field
    n = c.degrees
    pivots: list[list[int]] = []
    for i in range(n - 1):
        pivots.append(pivot_columns(c.diffs[i]))
    pivots.append([])  # d^n is zero
    ranks = [len(p) for p in pivots]
    for i in range(n):
        r_prev = ranks[i - 1] if i >= 1 else 0
        if c.shape[i] != r_prev + ranks[i]:
            raise NotAcyclic(f"H^{i} != 0")
    result = field.one()
    for i in range(n):
        ki = c.shape[i]
        m = ExactMatrix.zeros(ki, ki, field)
        col = 0
        if i >= 1:
            dprev = c.diffs[i - 1]
            for j in pivots[i - 1]:
                for r in range(ki):
                    m[r, col] = dprev[r, j]
                col += 1
        for j in pivots[i]:
            m[j, col] = field.one()
            col += 1
        det = det_exact(m)
        if det.is_zero():
            raise NotAcyclic("degenerate base-change matrix")
        result = result * det if i % 2 == 1 else result / det
    return -result


def _numeric_pivots(d: NumericMatrix, rank: int) -> list[int]:
    """First `rank` pivot columns of a numeric matrix by partial pivoting."""
    a = d.array.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    scale = max(np.max(np.abs(a)) if a.size else 0.0, 1e-300)
    for j in range(cols):
        if r >= rows or len(pivots) == rank:
            break
        i = r + int(np.argmax(np.abs(a[r:, j])))
        if abs(a[i, j]) <= NUMERIC_RANK_TOL * scale:
            continue
        a[[r, i]] = a[[i, r]]
        a[r + 1 :] -= np.outer(a[r + 1 :, j] / a[r, j], a[r])
        pivots.append(j)
        r += 1
    return pivots


def _milnor_torsion_numeric(c: CochainComplex) -> complex:
    n = c.degrees
    ranks = expected_ranks(c.shape)
    if ranks[-1] != 0 or any(r < 0 for r in ranks):
        raise NotAcyclic("shape is not admissible")
    actual = c.ranks()
    for i, d in enumerate(c.diffs):
        if actual[i] != ranks[i]:
            raise NotAcyclic(f"rank d^{i} = {actual[i]}, acyclicity needs {ranks[i]}")
    pivots = [_numeric_pivots(c.diffs[i], ranks[i]) for i in range(n - 1)]
    pivots.append([])
    for i in range(n - 1):
        if len(pivots[i]) != ranks[i]:
            raise NotAcyclic(f"could not find {ranks[i]} pivot columns in d^{i}")
    result = 1.0 + 0j
    for i in range(n):
        ki = c.shape[i]
        m = np.zeros((ki, ki), dtype=complex)
        col = 0
        if i >= 1:
            for j in pivots[i - 1]:
                m[:, col] = c.diffs[i - 1].array[:, j]
                col += 1
        for j in pivots[i]:
            m[j, col] = 1.0
            col += 1
        det = complex(np.linalg.det(m)) if ki else 1.0 + 0j
        if det == 0:
            raise NotAcyclic("degenerate base-change matrix")
        result = result * det if i % 2 == 1 else result / det
    return -result


def on_sigma(c: CochainComplex) -> bool:
    """True iff some combinatorial Laplacian P_i is singular."""
    for p in c.laplacians():
        if c.numeric:
            if p.rows and abs(det_numeric(p)) <= NUMERIC_RANK_TOL * max(p.norm(), 1.0) ** p.rows:
                return True
        else:
            if det_exact(p).is_zero():
                return True
    return False


def s_torsion(c: CochainComplex):
    """Determinant-Laplacian torsion

        ( prod_{i even} (det P_i)^i / prod_{i odd} (det P_i)^i )^{-1},

    equal to milnor_torsion(c)^2 off the singular locus."""
    laps = c.laplacians()
    if c.numeric:
        acc = 1.0 + 0j
        for i, p in enumerate(laps):
            det = det_numeric(p)
            if det == 0:
                raise OnSigma(f"det P_{i} = 0")
            acc *= det ** i if i % 2 == 0 else det ** (-i)
        return 1.0 / acc
    acc = c.field.one()
    for i, p in enumerate(laps):
        det = det_exact(p)
        if det.is_zero():
            raise OnSigma(f"det P_{i} = 0")
        acc = acc * det ** i if i % 2 == 0 else acc * det ** (-i)
    return acc ** -1


def _symmetric_orthonormalize(q: np.ndarray) -> np.ndarray:
    """Columns spanning a subspace -> columns orthonormal for the plain
    symmetric bilinear form b(x, y) = x^t y (no conjugation).

    Factors the complex-symmetric Gram matrix G = L L^t; fails when b is
    (numerically) degenerate on the subspace, which happens exactly on the
    singular locus."""
    g = q.T @ q
    m = g.shape[0]
    ell = np.zeros_like(g)
    for j in range(m):
        s = g[j, j] - ell[j, :j] @ ell[j, :j]
        piv = np.sqrt(complex(s))
        if abs(piv) < 1e-10 * max(1.0, abs(g[j, j])):
            raise OnSigma("bilinear form degenerate on spectral subspace")
        ell[j, j] = piv
        for i in range(j + 1, m):
            ell[i, j] = (g[i, j] - ell[i, :j] @ ell[j, :j]) / piv
    return q @ np.linalg.inv(ell).T


def spectral_split_storsion(c: CochainComplex, radius: float) -> complex:
    """Finite spectral-split identity: splits each cochain group by the
    spectral projectors of P_i at the given radius and returns

        (prod_{i even} det(P_i | large)^i / prod_{i odd} ...)^{-1}
        * (Milnor torsion of the small subcomplex)^2,

    which must equal s_torsion(c) for every admissible radius."""
    if not c.numeric:
        raise TypeError("spectral_split_storsion expects a numeric complex")
    if not is_acyclic(c):
        raise NotAcyclic("total complex is not acyclic")
    n = c.degrees
    laps = c.laplacians()
    large_factor = 1.0 + 0j
    small_bases: list[np.ndarray] = []
    for i, p in enumerate(laps):
        # validates the SplitTooClose precondition and the projector residuals
        eigen_split(p, radius)
        eigs = np.linalg.eigvals(p.array) if p.rows else np.array([])
        large = [lam for lam in eigs if abs(lam) > radius]
        det_large = complex(np.prod(large)) if large else 1.0 + 0j
        large_factor *= det_large ** i if i % 2 == 0 else det_large ** (-i)
        k_small = p.rows - len(large)
        q = invariant_subspace_basis(p, radius)
        if q.shape[1] != k_small:
            raise OnSigma("spectral subspace dimension mismatch")
        small_bases.append(_symmetric_orthonormalize(q) if q.shape[1] else q)
    # small subcomplex in the b-orthonormal bases
    small_shape = [b.shape[1] for b in small_bases]
    small_diffs = []
    for i in range(n - 1):
        bi, bj = small_bases[i], small_bases[i + 1]
        d = c.diffs[i].array
        img = d @ bi if bi.size else np.zeros((d.shape[0], bi.shape[1]), dtype=complex)
        m = bj.T @ img
        resid = np.linalg.norm(img - bj @ m) if img.size else 0.0
        if resid > 1e-7 * max(1.0, np.linalg.norm(d)):
            raise OnSigma("differential does not preserve the spectral split")
        small_diffs.append(NumericMatrix(m))
    if all(s == 0 for s in small_shape):
        tau_small = 1.0 + 0j
    else:
        small = CochainComplex(Shape(small_shape), small_diffs)
        tau_small = milnor_torsion(small)
    return (1.0 / large_factor) * tau_small ** 2

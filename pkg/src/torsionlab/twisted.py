"""Twisted cochain complexes over group rings and the Milnor-Turaev torsion.

Complexes come from finite presentations (Fox calculus) or from raw
group-ring matrices, and are evaluated at rank-1 or matrix representations
with the inverse-transport convention: a group element g acts through
rho(g)^{-1}.  Evaluation checks d*d = 0 and raises InvalidRepresentation
otherwise, so no relator rewriting is ever needed.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .complexes import CochainComplex, Shape, betti, is_acyclic, milnor_torsion
from .errors import (
    DimensionError,
    InvalidRepresentation,
    NotAcyclic,
    PathResolution,
    SingularSample,
)
from .groupring import GroupRingElt, Word, fox_derivative
from .linalg import ExactMatrix, NumericMatrix
from .scalars import QI, LaurentPoly, RatFunc, RationalFunctionField


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group: generator count and freely reduced relators."""

    generators: int
    relators: tuple[Word, ...]

    def __init__(self, generators: int, relators: Sequence[Word | Sequence[int]]):
        words = tuple(w if isinstance(w, Word) else Word(w) for w in relators)
        for w in words:
            if w.is_identity():
                raise ValueError("relators must be nonempty after free reduction")
            if w.max_generator() > generators:
                raise ValueError("relator uses an out-of-range generator")
        object.__setattr__(self, "generators", int(generators))
        object.__setattr__(self, "relators", words)


class GroupRingComplex:
    """Cochain complex with differentials over the integral group ring.

    shape counts cells per degree (before tensoring with the representation
    space); diffs[i] is a shape[i+1] x shape[i] nested list of GroupRingElt.
    d^2 = 0 holds after evaluation at compatible representations and is
    checked there, not here.
    """

    def __init__(
        self,
        generators: int,
        relators: Sequence[Word],
        shape: Sequence[int],
        diffs: Sequence[Sequence[Sequence[GroupRingElt]]],
    ):
        self.generators = int(generators)
        self.relators = tuple(relators)
        self.shape = Shape(shape)
        self.diffs = [[list(row) for row in d] for d in diffs]
        ks = self.shape.k
        if len(self.diffs) != len(ks) - 1:
            raise DimensionError("need one differential per consecutive degree pair")
        for i, d in enumerate(self.diffs):
            if len(d) != ks[i + 1] or any(len(row) != ks[i] for row in d):
                raise DimensionError(f"d^{i} block has wrong size")
        top = max(
            (e.max_generator() for d in self.diffs for row in d for e in row), default=0
        )
        if top > self.generators:
            raise ValueError("differential uses an out-of-range generator")


def presentation_complex(p: Presentation) -> GroupRingComplex:
    """Two-complex of a presentation: d^0 column (g_i - 1), d^1 rows the Fox
    derivatives of the relators; shape (1, generators, relators)."""
    g, r = p.generators, len(p.relators)
    one = GroupRingElt.one()
    d0 = [[GroupRingElt.of(Word.generator(i + 1)) - one] for i in range(g)]
    d1 = [[fox_derivative(rel, j + 1) for j in range(g)] for rel in p.relators]
    return GroupRingComplex(g, p.relators, (1, g, r), (d0, d1))


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rank1Rep:
    """Rank-1 representation: generator i maps to the unit monomial
    coeff_i * t^{exps_i} in nvars variables; coeff is a Gaussian-rational
    root of unity (so exactly one of +-1, +-i).

    An optional point (one complex value per variable) turns evaluation
    numeric."""

    nvars: int
    coeffs: tuple[QI, ...]
    exps: tuple[tuple[int, ...], ...]
    point: tuple[complex, ...] | None = None

    def __init__(self, nvars, coeffs, exps, point=None):
        coeffs = tuple(QI.coerce(c) for c in coeffs)
        exps = tuple(tuple(int(k) for k in e) for e in exps)
        for c in coeffs:
            if c not in (QI(1), QI(-1), QI(0, 1), QI(0, -1)):
                raise ValueError("rank-1 coefficients must be exact roots of unity (+-1, +-i)")
        for e in exps:
            if len(e) != nvars:
                raise ValueError("exponent vector length mismatch")
        if point is not None:
            point = tuple(complex(x) for x in point)
            if len(point) != nvars:
                raise ValueError("point dimension mismatch")
            if any(x == 0 for x in point):
                raise ValueError("evaluation point must avoid zero (images must stay invertible)")
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "point", point)

    @property
    def generators(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def variables(generators: int, point=None) -> "Rank1Rep":
        """Generator i |-> t_i."""
        exps = tuple(
            tuple(1 if j == i else 0 for j in range(generators)) for i in range(generators)
        )
        return Rank1Rep(generators, (QI(1),) * generators, exps, point)

    @staticmethod
    def abelianized(generators: int, point=None) -> "Rank1Rep":
        """All generators |-> t (one variable)."""
        return Rank1Rep(1, (QI(1),) * generators, ((1,),) * generators, point)

    def is_numeric(self) -> bool:
        return self.point is not None

    def word_monomial(self, w: Word) -> tuple[QI, tuple[int, ...]]:
        """(coeff, exponent vector) of rho(w)."""
        c = QI(1)
        e = [0] * self.nvars
        for x in w.letters:
            idx = abs(x) - 1
            if x > 0:
                c = c * self.coeffs[idx]
                for j in range(self.nvars):
                    e[j] += self.exps[idx][j]
            else:
                c = c / self.coeffs[idx]
                for j in range(self.nvars):
                    e[j] -= self.exps[idx][j]
        return c, tuple(e)

    def value_inv(self, w: Word):
        """rho(w)^{-1}: a LaurentPoly monomial, or a complex number at a point."""
        c, e = self.word_monomial(w)
        inv_c = c.inv()
        inv_e = tuple(-k for k in e)
        if self.point is None:
            return LaurentPoly.monomial(inv_c, inv_e)
        v = inv_c.to_complex()
        for x, k in zip(self.point, inv_e):
            v *= x ** k
        return v


@dataclass(frozen=True)
class MatrixRep:
    """Matrix representation: generator i maps to an invertible matrix.

    Relator residuals are checked against the tolerance from the wire-format
    contract when relators are supplied."""

    images: tuple[np.ndarray, ...]

    def __init__(self, images: Sequence[np.ndarray], relators: Sequence[Word] = ()):
        mats = []
        dim = None
        for m in images:
            arr = np.asarray(m, dtype=complex)
            if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
                raise ValueError("images must be square matrices")
            if dim is None:
                dim = arr.shape[0]
            elif arr.shape[0] != dim:
                raise ValueError("images must share one dimension")
            if abs(np.linalg.det(arr)) < 1e-12:
                raise ValueError("image matrix is not invertible")
            mats.append(arr)
        object.__setattr__(self, "images", tuple(mats))
        for rel in relators:
            r = self.value(rel)
            if np.linalg.norm(r - np.eye(self.dim)) > 1e-9:
                raise InvalidRepresentation("relator residual above 1e-9")

    @property
    def dim(self) -> int:
        return self.images[0].shape[0] if self.images else 1

    @property
    def generators(self) -> int:
        return len(self.images)

    def is_numeric(self) -> bool:
        return True

    def value(self, w: Word) -> np.ndarray:
        out = np.eye(self.dim, dtype=complex)
        for x in w.letters:
            m = self.images[abs(x) - 1]
            out = out @ (m if x > 0 else np.linalg.inv(m))
        return out

    def value_inv(self, w: Word) -> np.ndarray:
        return np.linalg.inv(self.value(w))


Representation = Rank1Rep | MatrixRep


def rep_dim(rho: Representation) -> int:
    return rho.dim if isinstance(rho, MatrixRep) else 1


@dataclass(frozen=True)
class EulerShift:
    """Integer vector in the free part of H_1, one entry per rank-1 variable."""

    a: tuple[int, ...]

    def __init__(self, a: Sequence[int]):
        object.__setattr__(self, "a", tuple(int(x) for x in a))

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.a)


@dataclass(frozen=True)
class OrientationSign:
    s: int = 1

    def __post_init__(self):
        if self.s not in (1, -1):
            raise ValueError("orientation sign must be +1 or -1")


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _eval_entry(entry: GroupRingElt, rho: Representation):
    if isinstance(rho, Rank1Rep) and not rho.is_numeric():
        total = LaurentPoly.zero(rho.nvars)
        for w, n in entry.terms.items():
            total = total + rho.value_inv(w).scale(QI(n))
        return total
    if isinstance(rho, Rank1Rep):
        return sum((n * rho.value_inv(w) for w, n in entry.terms.items()), 0j)
    blocks = np.zeros((rho.dim, rho.dim), dtype=complex)
    for w, n in entry.terms.items():
        blocks += n * rho.value_inv(w)
    return blocks


def evaluate(c: GroupRingComplex, rho: Representation) -> CochainComplex:
    """Evaluate a group-ring complex at a representation: each entry
    sum n_w * w becomes sum n_w * rho(w)^{-1}.  Raises InvalidRepresentation
    when the result fails d*d = 0."""
    if rho.generators < c.generators:
        raise InvalidRepresentation(
            f"representation defines {rho.generators} generators, complex needs {c.generators}"
        )
    dim = rep_dim(rho)
    symbolic = isinstance(rho, Rank1Rep) and not rho.is_numeric()
    shape = [k * dim for k in c.shape]
    diffs = []
    for i_deg, d in enumerate(c.diffs):
        rows = c.shape[i_deg + 1]
        cols = c.shape[i_deg]
        if symbolic:
            fld = RationalFunctionField(rho.nvars)
            m = ExactMatrix.zeros(rows, cols, fld)
            for i in range(rows):
                for j in range(cols):
                    m[i, j] = RatFunc(_eval_entry(d[i][j], rho))
        else:
            arr = np.zeros((rows * dim, cols * dim), dtype=complex)
            for i in range(rows):
                for j in range(cols):
                    v = _eval_entry(d[i][j], rho)
                    if dim == 1:
                        arr[i, j] = v
                    else:
                        arr[i * dim : (i + 1) * dim, j * dim : (j + 1) * dim] = v
            m = NumericMatrix(arr)
        diffs.append(m)
    try:
        return CochainComplex(shape, diffs)
    except DimensionError as exc:
        raise InvalidRepresentation(f"evaluated complex is not a complex: {exc}") from exc


def is_acyclic_rep(c: GroupRingComplex, rho: Representation) -> bool:
    return is_acyclic(evaluate(c, rho))


def det_a(shift: EulerShift, rho: Rank1Rep):
    """The monomial t^shift on the representation torus: symbolically a
    RatFunc, or its value at the representation's point.  Multiplicative in
    the shift."""
    if not isinstance(rho, Rank1Rep):
        raise TypeError("det_a needs a rank-1 representation")
    if len(shift) != rho.nvars:
        raise DimensionError("shift length must equal the variable count")
    if rho.is_numeric():
        v = 1.0 + 0j
        for x, k in zip(rho.point, shift):
            v *= x ** k
        return v
    return RatFunc(LaurentPoly.monomial(QI(1), tuple(shift)))


def milnor_turaev(
    c: GroupRingComplex,
    rho: Representation,
    shift: EulerShift | Sequence[int] = (),
    o: OrientationSign | int = 1,
):
    """Milnor-Turaev torsion: o^{dim V} * det_shift(rho) * tau(evaluate(c, rho)).

    Symbolic rank-1 representations give an exact RatFunc; numeric inputs a
    complex number."""
    if not isinstance(o, OrientationSign):
        o = OrientationSign(int(o))
    ev = evaluate(c, rho)
    if not is_acyclic(ev):
        raise NotAcyclic("evaluated complex has nonzero cohomology")
    tau = milnor_torsion(ev)
    dim = rep_dim(rho)
    sign = o.s ** dim
    shift = shift if isinstance(shift, EulerShift) else EulerShift(tuple(shift))
    if any(shift):
        if not isinstance(rho, Rank1Rep):
            raise TypeError("Euler shifts require a rank-1 representation")
        if len(shift) != rho.nvars:
            raise DimensionError("shift length must equal the variable count")
        tau = tau * det_a(shift, rho)
    return tau if sign == 1 else -tau


def alexander_from_torsion(p: Presentation) -> LaurentPoly:
    """Alexander polynomial of a knot-group presentation through the
    torsion of its exterior 2-complex at the abelianized representation.

    With this module's torsion direction the exterior bridge reads
    Delta(t) = normalize((t - 1) / tau); the unknot falls out as 1 with no
    special-casing.  Normalization: nonzero constant term, positive leading
    coefficient."""
    rho = Rank1Rep.abelianized(p.generators)
    tau = milnor_turaev(presentation_complex(p), rho, EulerShift((0,)), OrientationSign(1))
    t = RatFunc.variable(0, 1)
    bridge = (t - 1) / tau
    if not bridge.is_polynomial():
        raise NotAcyclic("torsion bridge did not reduce to a Laurent polynomial")
    return _normalize_alexander(bridge.as_laurent())


def _normalize_alexander(poly: LaurentPoly) -> LaurentPoly:
    if poly.is_zero():
        return poly
    m = poly.min_exponents()
    shifted = poly.shift(tuple(-k for k in m))
    _, lead = shifted.leading_term()
    if not lead.is_rational():
        raise ValueError("Alexander normalization expects rational coefficients")
    if lead.re < 0:
        shifted = shifted.scale(QI(-1))
    return shifted


# ---------------------------------------------------------------------------
# phase invariant
# ---------------------------------------------------------------------------

_MAX_REFINE_DEPTH = 48


def arg_invariant(T: RatFunc, path: Sequence[complex]) -> float:
    """Accumulated phase of T along a piecewise-linear path, mod pi.

    Segments are bisected adaptively until each log increment has modulus
    below pi/2; the result always equals arg(T(end)/T(start)) mod pi."""
    if T.nvars != 1:
        raise ValueError("arg_invariant expects a one-variable rational function")
    pts = [complex(z) for z in path]
    if len(pts) < 2:
        raise ValueError("need at least two sample points")

    def val(z: complex) -> complex:
        try:
            v = T.eval_complex([z])
        except ZeroDivisionError as exc:
            raise SingularSample(f"pole at {z}") from exc
        if v == 0 or not (abs(v) > 0):
            raise SingularSample(f"zero of T at {z}")
        return v

    total = 0.0
    for a, b in zip(pts, pts[1:]):
        total += _segment_arg(val, a, b, 0)
    return total % cmath.pi


def _segment_arg(val, a: complex, b: complex, depth: int) -> float:
    step = cmath.log(val(b) / val(a))
    if abs(step) < cmath.pi / 2:
        return step.imag
    if depth >= _MAX_REFINE_DEPTH:
        raise PathResolution("log increment stays >= pi/2 after maximal refinement")
    mid = (a + b) / 2
    return _segment_arg(val, a, mid, depth + 1) + _segment_arg(val, mid, b, depth + 1)

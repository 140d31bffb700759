"""Mapping tori, twisted Lefschetz zeta functions, closed-orbit counting
series, truncated dynamical torsion, and the per-orbit zeta factors.

Closed-orbit records carry an integer multiplicity `count` so that the
hyperbolic-toral-automorphism corpus can reach filtration 30 (the literal
orbit sets grow like the stretch factor to the 30th power); every operation
here is linear or multiplicative in that multiplicity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complexes import CochainComplex, is_acyclic, milnor_torsion
from .errors import DimensionError, NotAcyclic, NotNCT, ZeroFactor
from .groupring import GroupRingElt, Word
from .linalg import ExactMatrix, NumericMatrix, det_exact, det_numeric
from .scalars import QI, LaurentPoly, RatFunc, RationalFunctionField
from .twisted import GroupRingComplex, MatrixRep, Rank1Rep, Representation, rep_dim


# ---------------------------------------------------------------------------
# mapping torus
# ---------------------------------------------------------------------------


@dataclass
class ChainMapData:
    """A group-ring complex over the base group, per-degree chain maps
    realizing a homotopy equivalence, and the induced substitution on the
    base generators.

    Commutation of the maps with the differentials is checked after
    evaluation, through the d*d = 0 test on the assembled mapping torus."""

    base: GroupRingComplex
    maps: list[list[list[GroupRingElt]]]
    monodromy: list[Word]

    def __post_init__(self):
        ks = self.base.shape.k
        if len(self.maps) != len(ks):
            raise DimensionError("need one chain map block per degree")
        for q, m in enumerate(self.maps):
            if len(m) != ks[q] or any(len(row) != ks[q] for row in m):
                raise DimensionError(f"chain map in degree {q} is not {ks[q]}x{ks[q]}")
        if len(self.monodromy) != self.base.generators:
            raise DimensionError("monodromy table needs one word per base generator")


def identity_chain_map(c: GroupRingComplex) -> ChainMapData:
    one = GroupRingElt.one()
    zero = GroupRingElt.zero()
    maps = [
        [[one if i == j else zero for j in range(k)] for i in range(k)] for k in c.shape
    ]
    mono = [Word.generator(i + 1) for i in range(c.generators)]
    return ChainMapData(c, maps, mono)


def mapping_torus_complex(d: ChainMapData) -> GroupRingComplex:
    """Algebraic mapping torus over the extension of the base group by a new
    monodromy generator s (the last index): degree q is the sum of base
    degrees q-1 and q, with differential blocks

        [[ d^{q-1},  (-1)^q (id - s phi#_q) ],
         [ 0,        d^q                    ]].

    Conjugation relators g s = s alpha(g) are recorded for information."""
    base = d.base
    ks = base.shape.k
    n = len(ks)
    g0 = base.generators
    s = g0 + 1
    zero = GroupRingElt.zero()
    one = GroupRingElt.one()

    def cone_entry(q: int, i: int, j: int) -> GroupRingElt:
        e = (one if i == j else zero) - d.maps[q][i][j].left_mul_word(Word.generator(s))
        return e if q % 2 == 0 else -e

    shape = [(ks[q - 1] if q - 1 >= 0 else 0) + (ks[q] if q < n else 0) for q in range(n + 1)]
    diffs = []
    for q in range(n):
        rows_top = ks[q]                      # target base-degree q (from the shifted summand)
        rows_bot = ks[q + 1] if q + 1 < n else 0
        cols_left = ks[q - 1] if q - 1 >= 0 else 0
        cols_right = ks[q]
        block = [[zero] * (cols_left + cols_right) for _ in range(rows_top + rows_bot)]
        if cols_left:
            dq1 = base.diffs[q - 1]
            for i in range(rows_top):
                for j in range(cols_left):
                    block[i][j] = dq1[i][j]
        for i in range(rows_top):
            for j in range(cols_right):
                block[i][cols_left + j] = cone_entry(q, i, j)
        if rows_bot:
            dq = base.diffs[q]
            for i in range(rows_bot):
                for j in range(cols_right):
                    block[rows_top + i][cols_left + j] = dq[i][j]
        diffs.append(block)
    relators = list(base.relators)
    for i, w in enumerate(d.monodromy):
        conj = Word([i + 1, s]) * w.inverse() * Word([-s])
        if not conj.is_identity():
            relators.append(conj)
    return GroupRingComplex(s, relators, shape, diffs)


# ---------------------------------------------------------------------------
# Lefschetz zeta
# ---------------------------------------------------------------------------


@dataclass
class CohomologyAction:
    """Per-degree square matrices f^k on cohomology, exact or numeric."""

    degrees: list

    def __post_init__(self):
        for m in self.degrees:
            if m.rows != m.cols:
                raise DimensionError("cohomology action blocks must be square")

    def is_numeric(self) -> bool:
        return any(isinstance(m, NumericMatrix) for m in self.degrees)


def lefschetz_zeta(act: CohomologyAction, z):
    """prod_{k even} det(I - z f^k) / prod_{k odd} det(I - z f^k).

    z may be an exact scalar (RatFunc / LaurentPoly / rational) for exact
    actions, or a complex number for the numeric route."""
    if act.is_numeric() or isinstance(z, (complex, float)) and not isinstance(z, bool):
        zc = complex(z)
        num, den = 1.0 + 0j, 1.0 + 0j
        for k, m in enumerate(act.degrees):
            arr = m.array if isinstance(m, NumericMatrix) else m.to_numeric().array
            d = complex(np.linalg.det(np.eye(m.rows) - zc * arr)) if m.rows else 1.0 + 0j
            if k % 2 == 0:
                num *= d
            else:
                den *= d
        if den == 0:
            raise ZeroDivisionError("odd-degree determinant vanishes at this point")
        return num / den
    first = act.degrees[0]
    fld = first.field
    if isinstance(z, LaurentPoly):
        z = RatFunc(z)
    if isinstance(z, RatFunc):
        fld = RationalFunctionField(z.nvars)
    zz = fld.coerce(z)
    num, den = fld.one(), fld.one()
    for k, m in enumerate(act.degrees):
        n = m.rows
        mm = ExactMatrix.zeros(n, n, fld)
        for i in range(n):
            for j in range(n):
                mm[i, j] = (fld.one() if i == j else fld.zero()) - zz * fld.coerce(m[i, j])
        d = det_exact(mm)
        if k % 2 == 0:
            num = num * d
        else:
            den = den * d
    if den.is_zero():
        raise ZeroDivisionError("odd-degree determinant vanishes identically")
    return num / den


def wang_acyclic(act: CohomologyAction) -> bool:
    """True iff det(I - f^k) != 0 in every degree (z = 1 evaluation)."""
    if act.is_numeric():
        for m in act.degrees:
            if m.rows and abs(np.linalg.det(np.eye(m.rows) - m.array)) < 1e-12:
                return False
        return True
    for m in act.degrees:
        fld = m.field
        n = m.rows
        mm = ExactMatrix.zeros(n, n, fld)
        for i in range(n):
            for j in range(n):
                mm[i, j] = (fld.one() if i == j else fld.zero()) - m[i, j]
        if det_exact(mm).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# closed orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedOrbit:
    """One closed-trajectory class: conjugacy-class word, traversal period,
    Lefschetz sign, return-map eigenvalue parities, Lyapunov filtration, and
    an aggregated multiplicity."""

    class_word: Word
    period: int
    sign: int
    parity_minus: bool
    parity_plus: bool
    filtration: float
    count: int = 1

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.filtration > 0:
            raise ValueError("filtration must be positive")
        if self.count < 1:
            raise ValueError("count must be >= 1")


@dataclass(frozen=True)
class OrbitSeries:
    """Finite list of closed-orbit classes sorted by filtration."""

    orbits: tuple[ClosedOrbit, ...]

    def __init__(self, orbits: Sequence[ClosedOrbit]):
        tup = tuple(orbits)
        if any(a.filtration > b.filtration for a, b in zip(tup, tup[1:])):
            raise ValueError("orbits must be sorted by filtration")
        object.__setattr__(self, "orbits", tup)

    def below(self, bound: float) -> list[ClosedOrbit]:
        return [o for o in self.orbits if o.filtration <= bound]

    def __iter__(self):
        return iter(self.orbits)

    def __len__(self):
        return len(self.orbits)


def _trace_inv(rho: Representation, w: Word) -> complex:
    if isinstance(rho, Rank1Rep):
        v = rho.value_inv(w)
        if isinstance(v, LaurentPoly):
            raise TypeError("series evaluation needs a numeric representation point")
        return v
    return complex(np.trace(rho.value_inv(w)))


def p_series_truncated(orbits: OrbitSeries, rho: Representation, bound: float) -> complex:
    """P_{X;R}: sum of count * (sign / period) * tr rho(class)^{-1} over
    orbit classes with filtration <= bound."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    total = 0j
    for o in orbits.below(bound):
        total += o.count * (o.sign / o.period) * _trace_inv(rho, o.class_word)
    return total


def llet_factor(orbit: ClosedOrbit, rho: Representation) -> complex:
    """Per-orbit zeta factor

        det(id - (-1)^{e_-} rho(class)^{-1}) ^ ((-1)^{e_- + e_+}).

    Raises ZeroFactor when the determinant vanishes."""
    sgn = -1.0 if orbit.parity_minus else 1.0
    if isinstance(rho, Rank1Rep):
        v = _trace_inv(rho, orbit.class_word)
        det = 1.0 - sgn * v
    else:
        m = rho.value_inv(orbit.class_word)
        det = complex(np.linalg.det(np.eye(m.shape[0]) - sgn * m))
    if abs(det) < 1e-300:
        raise ZeroFactor("singular zeta factor")
    expo = -1 if (orbit.parity_minus ^ orbit.parity_plus) else 1
    return det ** expo


def zeta_R(orbits: OrbitSeries, rho: Representation, bound: float) -> complex:
    """Finite product of llet factors over simple (period-1) orbit classes
    with filtration <= bound, each raised to its multiplicity."""
    total = 1.0 + 0j
    for o in orbits.below(bound):
        if o.period != 1:
            continue
        f = llet_factor(o, rho)
        total *= f ** o.count if o.count > 1 else f
    return total


def dynamical_torsion_truncated(
    c: GroupRingComplex | None,
    orbits: OrbitSeries,
    rho: Representation,
    bound: float,
) -> complex:
    """Rest-point torsion times exp of the truncated counting series; flows
    without rest points contribute the empty-complex factor 1."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if c is None or all(k == 0 for k in c.shape):
        tau = 1.0 + 0j
    else:
        from .twisted import evaluate

        ev = evaluate(c, rho)
        if not is_acyclic(ev):
            raise NotAcyclic("rest-point complex is not acyclic at this representation")
        tau = milnor_torsion(ev)
        if not isinstance(tau, complex):
            raise TypeError("dynamical torsion needs a numeric representation")
    return tau * cmath.exp(p_series_truncated(orbits, rho, bound))


def p_series_tail_bound(orbits: OrbitSeries, rho: Representation, bound: float) -> float:
    """Sum of |count * sign/period * tr rho(class)^{-1}| over the orbits in
    the series beyond the bound (the known part of the truncation error)."""
    total = 0.0
    for o in orbits:
        if o.filtration > bound:
            total += o.count * abs(_trace_inv(rho, o.class_word)) / o.period
    return total


# ---------------------------------------------------------------------------
# suspension of a hyperbolic toral automorphism
# ---------------------------------------------------------------------------


def _mat2_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _det2(a) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def _tr2(a) -> int:
    return a[0][0] + a[1][1]


def lefschetz_numbers(phi_matrix, max_n: int) -> list[int]:
    """det(I - A^n) for n = 1..max_n, exact integers."""
    a = tuple(tuple(int(x) for x in row) for row in phi_matrix)
    out = []
    p = a
    for _ in range(max_n):
        out.append(1 - _tr2(p) + _det2(p))
        p = _mat2_mul(p, a)
    return out


def _eig_counts(tr: int, det: int) -> tuple[int, int]:
    """(#real eigenvalues > 1, #real eigenvalues < -1) of a 2x2 integer
    matrix with char poly x^2 - tr x + det and real spectrum off {-1, +1}."""
    p1 = 1 - tr + det     # p(1)
    pm1 = 1 + tr + det    # p(-1)
    if p1 == 0 or pm1 == 0:
        raise NotNCT("eigenvalue at +-1: degenerate closed trajectories")
    if tr * tr - 4 * det < 0:
        return 0, 0
    gt1 = 1 if p1 < 0 else (2 if tr / 2 > 1 else 0)
    ltm1 = 1 if pm1 < 0 else (2 if tr / 2 < -1 else 0)
    return gt1, ltm1


def suspension_orbits(
    phi_matrix, max_period: int, *, monodromy_gen: int = 1
) -> OrbitSeries:
    """Closed-orbit classes of the suspension flow of a hyperbolic toral
    automorphism, aggregated by (least period, traversal count) up to total
    winding max_period.

    Fixed points of A^n number |det(A^n - I)|; least-period counts follow by
    inclusion-exclusion and each geometric orbit of least period l traversed
    k times contributes one class of period k, filtration kl, count N_l / l.
    Signs are sign det(I - A^n); parity_plus counts the flow-direction unit
    eigenvalue along with the real eigenvalues above +1.  Class words carry
    the monodromy letter inverted (the Lyapunov form is p*dt and the flow
    moves against it), so traces under the inverse-transport evaluation give
    positive powers of the monodromy value."""
    a = tuple(tuple(int(x) for x in row) for row in phi_matrix)
    if len(a) != 2 or any(len(r) != 2 for r in a):
        raise DimensionError("expected a 2x2 integer matrix")
    if abs(_tr2(a)) <= 2:
        raise NotNCT(f"|trace| = {abs(_tr2(a))} <= 2: not a hyperbolic automorphism")
    if abs(_det2(a)) != 1:
        raise NotNCT("matrix must be invertible over the integers")
    fixed: dict[int, int] = {}
    p = a
    for n in range(1, max_period + 1):
        fixed[n] = abs(1 - _tr2(p) + _det2(p))
        p = _mat2_mul(p, a)
    least: dict[int, int] = {}
    for n in range(1, max_period + 1):
        least[n] = fixed[n] - sum(least[d] for d in range(1, n) if n % d == 0)
    powers: dict[int, tuple] = {}
    p = a
    for n in range(1, max_period + 1):
        powers[n] = p
        p = _mat2_mul(p, a)
    entries = []
    for ell in range(1, max_period + 1):
        n_orbits = least[ell] // ell
        if least[ell] % ell:
            raise NotNCT("least-period point count not divisible by the period")
        if n_orbits == 0:
            continue
        for k in range(1, max_period // ell + 1):
            n = k * ell
            tr, det = _tr2(powers[n]), _det2(powers[n])
            sign = 1 if (1 - tr + det) > 0 else -1
            gt1, ltm1 = _eig_counts(tr, det)
            entries.append(
                ClosedOrbit(
                    class_word=Word([-monodromy_gen] * n),
                    period=k,
                    sign=sign,
                    parity_minus=bool(ltm1 % 2),
                    parity_plus=bool((gt1 + 1) % 2),
                    filtration=float(n),
                    count=n_orbits,
                )
            )
    entries.sort(key=lambda o: (o.filtration, o.period))
    return OrbitSeries(entries)


def lefschetz_aggregate(orbits: OrbitSeries, n: int) -> int:
    """Signed count sum over classes of total winding n:
    sum count * least_period * sign, which must reproduce det(I - A^n)."""
    total = 0
    for o in orbits:
        if o.filtration == float(n):
            ell = int(round(o.filtration / o.period))
            total += o.count * ell * o.sign
    return total

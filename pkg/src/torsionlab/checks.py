"""Randomized invariant suites behind `torsionlab check`.

Each check returns a CheckResult with a pass count, so the CLI can print
one line per invariant.  Everything is deterministic for a fixed seed.
"""

from __future__ import annotations

import cmath
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import corpus as corpus_mod
from .complexes import (
    CochainComplex,
    betti,
    expected_ranks,
    is_acyclic,
    milnor_torsion,
    on_sigma,
    s_torsion,
    spectral_split_storsion,
)
from .dynamics import (
    CohomologyAction,
    identity_chain_map,
    lefschetz_aggregate,
    lefschetz_numbers,
    lefschetz_zeta,
    mapping_torus_complex,
    p_series_truncated,
    suspension_orbits,
    zeta_R,
)
from .errors import OnSigma
from .groupring import GroupRingElt, Word, fox_derivative
from .linalg import ExactMatrix, NumericMatrix, det_exact, eigen_split, rank_exact
from .scalars import QI, QI_FIELD, LaurentPoly, RatFunc, RationalFunctionField
from .twisted import (
    EulerShift,
    Presentation,
    Rank1Rep,
    arg_invariant,
    evaluate,
    milnor_turaev,
    presentation_complex,
)


@dataclass
class CheckResult:
    name: str
    passed: int
    total: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail and not self.ok else ""
        return f"{self.name}: {self.passed}/{self.total} {status}{extra}"


# ---------------------------------------------------------------------------
# random generators
# ---------------------------------------------------------------------------


def random_admissible_shape(rng: random.Random, max_len: int = 5, max_k: int = 6) -> list[int]:
    """Random admissible shape: ranks first, k_i = r_{i-1} + r_i."""
    while True:
        length = rng.randint(2, max_len)
        ranks = [rng.randint(0, max_k // 2) for _ in range(length - 1)]
        ks = []
        for i in range(length):
            r_prev = ranks[i - 1] if i >= 1 else 0
            r_cur = ranks[i] if i < length - 1 else 0
            ks.append(r_prev + r_cur)
        if all(k <= max_k for k in ks) and sum(ks) > 0:
            return ks


def random_invertible_exact(n: int, rng: random.Random, field=QI_FIELD) -> ExactMatrix:
    """L*D*U with unitriangular integer L, U and invertible diagonal D."""
    ell = ExactMatrix.identity(n, field)
    upp = ExactMatrix.identity(n, field)
    dia = ExactMatrix.zeros(n, n, field)
    for i in range(n):
        for j in range(i):
            ell[i, j] = field.coerce(rng.randint(-2, 2))
            upp[j, i] = field.coerce(rng.randint(-2, 2))
        dia[i, i] = _random_unit(rng, field)
    return ell * dia * upp


def _random_unit(rng: random.Random, field):
    if isinstance(field, RationalFunctionField):
        z = RatFunc.variable(0, field.nvars)
        choices = [RatFunc.one(field.nvars), RatFunc.constant(2, field.nvars), z, z - 1, z + 2]
        return choices[rng.randrange(len(choices))]
    return QI(rng.choice([1, -1, 2, -2, 3]))


def exact_inverse(m: ExactMatrix) -> ExactMatrix:
    n = m.rows
    field = m.field
    aug = ExactMatrix.zeros(n, 2 * n, field)
    for i in range(n):
        for j in range(n):
            aug[i, j] = m[i, j]
        aug[i, n + i] = field.one()
    from .linalg import _echelon

    rows, piv = _echelon(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return ExactMatrix.from_rows([r[n:] for r in rows], field)


def random_acyclic_complex(shape, rng: random.Random, field=QI_FIELD) -> CochainComplex:
    """Conjugate the standard acyclic complex by random invertible matrices."""
    ks = list(shape)
    ranks = expected_ranks(ks)
    a = [random_invertible_exact(k, rng, field) for k in ks]
    a_inv = [exact_inverse(m) for m in a]
    diffs = []
    for i in range(len(ks) - 1):
        e = ExactMatrix.zeros(ks[i + 1], ks[i], field)
        r_prev = ranks[i - 1] if i >= 1 else 0
        for t in range(ranks[i]):
            e[t, r_prev + t] = field.one()
        diffs.append(a[i + 1] * e * a_inv[i])
    return CochainComplex(ks, diffs)


def random_acyclic_numeric(shape, rng: np.random.Generator) -> CochainComplex:
    ks = list(shape)
    ranks = expected_ranks(ks)
    mats = []
    for k in ks:
        while True:
            m = rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k))
            if k == 0 or abs(np.linalg.det(m)) > 1e-3:
                mats.append(m)
                break
    diffs = []
    for i in range(len(ks) - 1):
        e = np.zeros((ks[i + 1], ks[i]), dtype=complex)
        r_prev = ranks[i - 1] if i >= 1 else 0
        for t in range(ranks[i]):
            e[t, r_prev + t] = 1.0
        diffs.append(NumericMatrix(mats[i + 1] @ e @ np.linalg.inv(mats[i])))
    return CochainComplex(ks, diffs)


def admissible_radii(c: CochainComplex, want: int = 3) -> list[float]:
    """Radii in wide relative gaps of the joint Laplacian spectrum."""
    mags = sorted(abs(l) for p in c.laplacians() for l in np.linalg.eigvals(p.array))
    uniq: list[float] = []
    for m in mags:
        if m > 1e-12 and (not uniq or m > uniq[-1] * (1 + 1e-6)):
            uniq.append(m)
    out = [uniq[0] * 0.5, uniq[-1] * 2]
    for a, b in zip(uniq, uniq[1:]):
        if b / a > 1.5:
            out.append((a * b) ** 0.5)
    return out[:want]


# ---------------------------------------------------------------------------
# algebra suite
# ---------------------------------------------------------------------------


def check_det_multiplicative(rng: random.Random, trials: int = 20) -> CheckResult:
    passed = 0
    rf = RationalFunctionField(1)
    for t in range(trials):
        field = QI_FIELD if t % 2 == 0 else rf
        a = random_invertible_exact(4, rng, field)
        b = random_invertible_exact(4, rng, field)
        if det_exact(a * b) == det_exact(a) * det_exact(b):
            passed += 1
    return CheckResult("det multiplicative (Q and Q(z))", passed, trials)


def _rank_minor_oracle(rows: list[list[int]]) -> int:
    """Largest size of a nonvanishing minor, by enumeration."""
    r, c = len(rows), len(rows[0]) if rows else 0
    for size in range(min(r, c), 0, -1):
        for ri in itertools.combinations(range(r), size):
            for ci in itertools.combinations(range(c), size):
                sub = ExactMatrix.from_rows([[rows[i][j] for j in ci] for i in ri], QI_FIELD)
                if not det_exact(sub).is_zero():
                    return size
    return 0


def check_rank_oracle(rng: random.Random) -> CheckResult:
    """rank_exact against minor enumeration: exhaustive for shapes with at
    most 9 entries, seeded samples for the larger shapes up to 3x4."""
    passed = total = 0
    shapes_exhaustive = [(1, 1), (2, 2), (2, 3), (3, 3)]
    for r, c in shapes_exhaustive:
        for values in itertools.product((-1, 0, 1), repeat=r * c):
            rows = [list(values[i * c : (i + 1) * c]) for i in range(r)]
            total += 1
            if rank_exact(ExactMatrix.from_rows(rows, QI_FIELD)) == _rank_minor_oracle(rows):
                passed += 1
    for r, c in [(2, 4), (3, 4)]:
        for _ in range(400):
            rows = [[rng.choice((-1, 0, 1)) for _ in range(c)] for _ in range(r)]
            total += 1
            if rank_exact(ExactMatrix.from_rows(rows, QI_FIELD)) == _rank_minor_oracle(rows):
                passed += 1
    return CheckResult("rank vs minor oracle", passed, total)


def _random_laurent(rng: random.Random, nvars: int) -> LaurentPoly:
    while True:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(-2, 2) for _ in range(nvars))
            terms[e] = QI(rng.randint(-3, 3), rng.randint(-1, 1))
        p = LaurentPoly(nvars, terms)
        if not p.is_zero():
            return p


def check_ratfunc_field(rng: random.Random, trials: int = 60) -> CheckResult:
    passed = 0
    for t in range(trials):
        nvars = 1 + (t % 2)
        a = _random_laurent(rng, nvars)
        b = _random_laurent(rng, nvars)
        r = RatFunc(a, b)
        ok = (r * r.inv()) == RatFunc.one(nvars)
        rr = RatFunc(r.num, r.den)  # canonical form is idempotent
        ok = ok and rr.num == r.num and rr.den == r.den
        if ok:
            passed += 1
    return CheckResult("rational-function field laws", passed, trials)


def check_eigen_split_props(seed: int, trials: int = 12) -> CheckResult:
    rng = np.random.default_rng(seed)
    passed = 0
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        m = NumericMatrix(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
        eigs = np.abs(np.linalg.eigvals(m.array))
        radius = float(np.median(eigs) * 1.07 + 0.013)
        if np.min(np.abs(eigs - radius)) < 1e-6:
            radius *= 1.1
        try:
            ps, pl = eigen_split(m, radius)
        except Exception:
            continue
        ok = (
            np.linalg.norm(ps.array @ ps.array - ps.array) < 1e-8
            and np.linalg.norm(pl.array @ pl.array - pl.array) < 1e-8
            and np.linalg.norm(ps.array @ m.array - m.array @ ps.array) < 1e-8 * max(1.0, m.norm())
            and np.allclose(ps.array + pl.array, np.eye(n))
        )
        if ok:
            passed += 1
        else:
            passed += 0
    return CheckResult("eigen_split projector properties", passed, trials)


def suite_algebra(seed: int) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        check_det_multiplicative(rng),
        check_rank_oracle(rng),
        check_ratfunc_field(rng),
        check_eigen_split_props(seed),
    ]


# ---------------------------------------------------------------------------
# torsion suite
# ---------------------------------------------------------------------------


def check_tau_squared(seed: int, n_rational: int = 200, n_symbolic: int = 20) -> CheckResult:
    rng = random.Random(seed)
    passed = total = 0
    for _ in range(n_rational):
        c = random_acyclic_complex(random_admissible_shape(rng), rng, QI_FIELD)
        total += 1
        try:
            if milnor_torsion(c) ** 2 == s_torsion(c):
                passed += 1
        except OnSigma:
            total -= 1  # complex happened to sit on the singular locus
    rf = RationalFunctionField(1)
    for _ in range(n_symbolic):
        c = random_acyclic_complex(random_admissible_shape(rng, max_len=4, max_k=4), rng, rf)
        total += 1
        try:
            if milnor_torsion(c) ** 2 == s_torsion(c):
                passed += 1
        except OnSigma:
            total -= 1
    return CheckResult("tau^2 = S-tau", passed, total)


def check_pivot_permutation(seed: int, trials: int = 25) -> CheckResult:
    rng = random.Random(seed + 1)
    passed = 0
    for _ in range(trials):
        ks = random_admissible_shape(rng, max_len=4, max_k=5)
        c = random_acyclic_complex(ks, rng)
        perms = []
        for k in ks:
            p = list(range(k))
            rng.shuffle(p)
            perms.append(p)
        pmats = []
        for p in perms:
            m = ExactMatrix.zeros(len(p), len(p), QI_FIELD)
            for i, j in enumerate(p):
                m[j, i] = QI(1)
            pmats.append(m)
        diffs = [pmats[i + 1] * c.diffs[i] * exact_inverse(pmats[i]) for i in range(len(ks) - 1)]
        cp = CochainComplex(ks, diffs)
        if milnor_torsion(cp) ** 2 == milnor_torsion(c) ** 2:
            passed += 1
    return CheckResult("torsion^2 invariant under basis permutations", passed, trials)


def check_basis_change_law(seed: int, trials: int = 20) -> CheckResult:
    """d^i -> A_{i+1} d^i A_i^{-1} multiplies tau by prod det(A_i)^{(-1)^{i+1}}."""
    rng = random.Random(seed + 2)
    passed = 0
    for _ in range(trials):
        ks = random_admissible_shape(rng, max_len=4, max_k=5)
        c = random_acyclic_complex(ks, rng)
        a = [random_invertible_exact(k, rng) for k in ks]
        diffs = [a[i + 1] * c.diffs[i] * exact_inverse(a[i]) for i in range(len(ks) - 1)]
        cc = CochainComplex(ks, diffs)
        factor = QI_FIELD.one()
        for i, m in enumerate(a):
            d = det_exact(m)
            factor = factor / d if i % 2 == 0 else factor * d
        if milnor_torsion(cc) == milnor_torsion(c) * factor:
            passed += 1
    return CheckResult("torsion basis-change law", passed, trials)


def check_sigma_locus(seed: int, trials: int = 20) -> CheckResult:
    rng = random.Random(seed + 3)
    passed = total = 0
    for _ in range(trials):
        c = random_acyclic_complex(random_admissible_shape(rng, max_len=4, max_k=5), rng)
        total += 1
        if not on_sigma(c):
            try:
                milnor_torsion(c)
                passed += 1
            except Exception:
                pass
        else:
            try:
                s_torsion(c)
            except OnSigma:
                passed += 1
    # zero complexes sit on Sigma
    zc = CochainComplex([1, 1], [ExactMatrix.zeros(1, 1, QI_FIELD)])
    total += 1
    if on_sigma(zc):
        passed += 1
    return CheckResult("singular locus detection", passed, total)


def check_spectral_radius_independence(seed: int, trials: int = 8) -> CheckResult:
    rng = np.random.default_rng(seed + 4)
    passed = total = 0
    for _ in range(trials):
        shape = [1, 2, 1] if rng.integers(2) else [2, 3, 1]
        c = random_acyclic_numeric(shape, rng)
        radii = admissible_radii(c, want=2)
        if len(radii) < 2:
            continue
        total += 1
        try:
            v1 = spectral_split_storsion(c, radii[0])
            v2 = spectral_split_storsion(c, radii[1])
        except Exception:
            continue
        if abs(v1 - v2) <= 1e-7 * max(abs(v1), abs(v2)):
            passed += 1
    return CheckResult("spectral split independent of radius", passed, total)


def check_fox_identity() -> CheckResult:
    passed = total = 0
    one = GroupRingElt.one()
    for name in ("trefoil", "figure8", "torus2"):
        c = corpus_mod.load_complex(name)
        for rel in c.relators:
            gens = max((abs(x) for x in rel.letters), default=0)
            tot = GroupRingElt.zero()
            for g in range(1, gens + 1):
                tot = tot + fox_derivative(rel, g) * (GroupRingElt.of(Word.generator(g)) - one)
            total += 1
            if tot == GroupRingElt.of(rel) - one:
                passed += 1
    return CheckResult("Fox fundamental identity on corpus relators", passed, total)


def check_evaluate_products(seed: int, trials: int = 40) -> CheckResult:
    rng = random.Random(seed + 5)
    rho = Rank1Rep.variables(3)
    rng_np = np.random.default_rng(seed + 5)
    mats = [np.linalg.qr(rng_np.normal(size=(2, 2)) + 1j * rng_np.normal(size=(2, 2)))[0] for _ in range(3)]
    from .twisted import MatrixRep

    rho_m = MatrixRep(mats)
    passed = 0
    for _ in range(trials):
        u = Word([rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 5))])
        v = Word([rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 5))])
        lhs = rho.value_inv(u * v)
        rhs = rho.value_inv(v) * rho.value_inv(u)
        ok = lhs == rhs
        lm = rho_m.value_inv(u * v)
        rm = rho_m.value_inv(v) @ rho_m.value_inv(u)
        ok = ok and np.linalg.norm(lm - rm) < 1e-12 * max(1.0, np.linalg.norm(lm))
        if ok:
            passed += 1
    return CheckResult("inverse-transport product rule", passed, trials)


def check_symbolic_vs_numeric(seed: int, points: int = 10) -> CheckResult:
    rng = random.Random(seed + 6)
    c = corpus_mod.load_complex("trefoil")
    rho = corpus_mod.load_rep("knot_abelian_rep")
    tau = milnor_turaev(c, rho)
    passed = 0
    for _ in range(points):
        pt = complex(rng.uniform(0.4, 2.0), rng.uniform(-1.0, 1.0))
        if abs(pt) < 1e-3:
            pt += 0.5
        rho_pt = Rank1Rep(rho.nvars, rho.coeffs, rho.exps, point=[pt])
        try:
            num = milnor_turaev(c, rho_pt)
        except Exception:
            continue
        sym = tau.eval_complex([pt])
        if abs(num - sym) <= 1e-9 * max(1.0, abs(sym)):
            passed += 1
    return CheckResult("symbolic torsion matches pointwise evaluation", passed, points)


def check_euler_shift_law(seed: int, trials: int = 50) -> CheckResult:
    rng = random.Random(seed + 7)
    circle = corpus_mod.load_complex("circle")
    trefoil = corpus_mod.load_complex("trefoil")
    rho_c = corpus_mod.load_rep("circle_rep")
    rho_k = corpus_mod.load_rep("knot_abelian_rep")
    passed = 0
    for t in range(trials):
        c, rho = (circle, rho_c) if t % 2 == 0 else (trefoil, rho_k)
        a = EulerShift((rng.randint(-5, 5),))
        lhs = milnor_turaev(c, rho, shift=a)
        rhs = milnor_turaev(c, rho) * RatFunc(LaurentPoly.monomial(QI(1), tuple(a)))
        if lhs == rhs:
            passed += 1
    return CheckResult("Euler-shift change law", passed, trials)


def check_phase_composition(seed: int, trials: int = 20) -> CheckResult:
    rng = random.Random(seed + 8)
    c = corpus_mod.load_complex("trefoil")
    tau = milnor_turaev(c, corpus_mod.load_rep("knot_abelian_rep"))
    z = RatFunc.variable(0, 1)
    funcs = [z, 1 - z, tau]
    passed = 0
    for t in range(trials):
        f = funcs[t % 3]

        def sample():
            return complex(rng.uniform(1.5, 2.5), rng.uniform(0.2, 1.0))

        p1, p2, p3 = sample(), sample(), sample()
        try:
            direct = arg_invariant(f, [p1, p2, p3])
            first = arg_invariant(f, [p1, p2])
            second = arg_invariant(f, [p2, p3])
        except Exception:
            continue
        d = abs((first + second) % cmath.pi - direct)
        if min(d, cmath.pi - d) < 2e-6:
            passed += 1
    return CheckResult("phase invariant path composition", passed, trials)


def check_zero_pole_locus() -> CheckResult:
    """Zeros/poles of the reduced trefoil torsion lie where acyclicity fails."""
    c = corpus_mod.load_complex("trefoil")
    rho = corpus_mod.load_rep("knot_abelian_rep")
    tau = milnor_turaev(c, rho)
    roots: list[complex] = []
    for poly in (tau.num, tau.den):
        coeffs = _poly_coeff_list(poly)
        if len(coeffs) > 1:
            roots.extend(np.roots(coeffs))
    passed = total = 0
    for r in roots:
        if abs(r) < 1e-9:
            continue  # 0 is outside the representation torus
        total += 1
        rho_pt = Rank1Rep(1, rho.coeffs, rho.exps, point=[complex(r)])
        ev = evaluate(c, rho_pt)
        sigmas = [
            np.linalg.svd(d.array, compute_uv=False) for d in ev.diffs if d.array.size
        ]
        ranks = [int(np.sum(s > 1e-8 * max(1.0, s[0]))) for s in sigmas]
        expect = expected_ranks(ev.shape.k)
        if any(r_actual < r_expected for r_actual, r_expected in zip(ranks, expect)):
            passed += 1
    return CheckResult("torsion zeros/poles sit on the acyclicity-failure locus", passed, total)


def _poly_coeff_list(p: LaurentPoly) -> list[complex]:
    if p.nvars != 1:
        raise ValueError("one variable expected")
    if p.is_zero():
        return [0j]
    lo = p.min_exponents()[0]
    hi = p.max_exponents()[0]
    return [p.terms.get((e,), QI(0)).to_complex() for e in range(hi, lo - 1, -1)]


def suite_torsion(seed: int) -> list[CheckResult]:
    return [
        check_tau_squared(seed),
        check_pivot_permutation(seed),
        check_basis_change_law(seed),
        check_sigma_locus(seed),
        check_spectral_radius_independence(seed),
        check_fox_identity(),
        check_evaluate_products(seed),
        check_symbolic_vs_numeric(seed),
        check_euler_shift_law(seed),
        check_phase_composition(seed),
        check_zero_pole_locus(),
    ]


# ---------------------------------------------------------------------------
# dynamics suite
# ---------------------------------------------------------------------------


def check_lefschetz_aggregation() -> CheckResult:
    a = corpus_mod.CAT_MAP
    orbits = suspension_orbits(a, 10)
    ls = lefschetz_numbers(a, 10)
    passed = sum(1 for n in range(1, 11) if lefschetz_aggregate(orbits, n) == ls[n - 1])
    return CheckResult("Lefschetz aggregation det(I - A^n)", passed, 10)


def check_zeta_structure() -> CheckResult:
    act = corpus_mod.load_action()
    zeta = lefschetz_zeta(act, RatFunc.variable(0, 1))
    even = sum(m.rows for k, m in enumerate(act.degrees) if k % 2 == 0)
    odd = sum(m.rows for k, m in enumerate(act.degrees) if k % 2 == 1)
    ok_num = max(sum(e) for e in zeta.num.terms) == even
    ok_den = max(sum(e) for e in zeta.den.terms) == odd
    return CheckResult("zeta numerator/denominator degrees", int(ok_num) + int(ok_den), 2)


def check_wang_torsion() -> CheckResult:
    """Mapping-torus torsion = +-(monomial) * zeta(1) for point, circle,
    torus bases with symbolic scalar monodromy."""
    from .twisted import GroupRingComplex

    passed = total = 0

    # point base: zeta with f^0 = u gives 1 - u
    point = GroupRingComplex(0, [], [1], [])
    mt = mapping_torus_complex(identity_chain_map(point))
    tau = milnor_turaev(mt, Rank1Rep.variables(1))
    u = RatFunc.variable(0, 1)
    rf1 = RationalFunctionField(1)
    zeta = lefschetz_zeta(CohomologyAction([ExactMatrix.from_rows([[u]], rf1)]), QI(1))
    total += 1
    if (tau / zeta).is_unit_monomial():
        passed += 1

    # circle base at generic z: twisted cohomology vanishes, zeta = 1
    circle = corpus_mod.load_complex("circle")
    mt2 = mapping_torus_complex(identity_chain_map(circle))
    tau2 = milnor_turaev(mt2, Rank1Rep.variables(2))
    total += 1
    if tau2.is_unit_monomial():
        passed += 1

    # torus base with the cat map: +-u^m (1-u)^2/(1-3u+u^2)
    catmap = corpus_mod.load_complex("catmap_torus")
    rho = corpus_mod.load_rep("catmap_rep")
    tau3 = milnor_turaev(catmap, rho)
    act = corpus_mod.load_action()
    f_scaled = []
    for m in act.degrees:
        n = m.rows
        mm = ExactMatrix.zeros(n, n, rf1)
        for i in range(n):
            for j in range(n):
                mm[i, j] = u * rf1.coerce(m[i, j])
        f_scaled.append(mm)
    zeta3 = lefschetz_zeta(CohomologyAction(f_scaled), QI(1))
    total += 1
    if (tau3 / zeta3).is_unit_monomial():
        passed += 1
    return CheckResult("mapping-torus torsion = twisted zeta at 1", passed, total)


def check_zeta_vs_series(bound: float = 30.0) -> CheckResult:
    orbits = corpus_mod.load_orbits()
    passed = total = 0
    for uu in (0.05, 0.1, 0.2):
        rho = Rank1Rep(1, [QI(1)] * 3, [(0,), (0,), (1,)], point=[uu])
        p = p_series_truncated(orbits, rho, bound)
        z = zeta_R(orbits, rho, bound)
        total += 1
        if abs(cmath.log(z) - p) < 1e-6:
            passed += 1
    return CheckResult("log zeta_R tracks the counting series", passed, total)


def suite_dynamics(seed: int) -> list[CheckResult]:
    return [
        check_lefschetz_aggregation(),
        check_zeta_structure(),
        check_wang_torsion(),
        check_zeta_vs_series(),
    ]


def suite_corpus() -> list[CheckResult]:
    out = []
    for name, ok, detail in corpus_mod.validate_corpus():
        out.append(CheckResult(f"corpus {name}", int(ok), 1, detail))
    return out


SUITES = {
    "algebra": lambda seed: suite_algebra(seed),
    "torsion": lambda seed: suite_torsion(seed),
    "dynamics": lambda seed: suite_dynamics(seed),
    "corpus": lambda seed: suite_corpus(),
}


def run_suite(name: str, seed: int) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("algebra", "torsion", "dynamics", "corpus"):
            out.extend(SUITES[key](seed))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed)

"""Exact scalar tower: Gaussian rationals, multivariate Laurent polynomials,
and reduced rational functions.

All three levels have exact equality.  GaussianRational is the coefficient
field; LaurentPoly stores a finite map from integer exponent vectors to
nonzero coefficients; RatFunc keeps a canonical reduced numerator/denominator
pair (gcd a unit, denominator leading coefficient 1, denominator minimal
exponent 0 in every variable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Union[int, Fraction]


class GaussianRational:
    """Element of Q(i) with exact arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rat = 0, im: Rat = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- constructors -----------------------------------------------------
    @staticmethod
    def one() -> "GaussianRational":
        return GaussianRational(1)

    @staticmethod
    def zero() -> "GaussianRational":
        return GaussianRational(0)

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(0, 1)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inv()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = GaussianRational.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- misc ---------------------------------------------------------------
    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


QI = GaussianRational


def _add_exps(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Multivariate Laurent polynomial over the Gaussian rationals.

    terms maps exponent vectors (tuples of ints, possibly negative) to
    nonzero GaussianRational coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, GaussianRational] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError("exponent vector length mismatch")
                c = GaussianRational.coerce(c)
                if not c.is_zero():
                    if exps in clean:
                        c = clean[exps] + c
                        if c.is_zero():
                            del clean[exps]
                            continue
                    clean[exps] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @staticmethod
    def constant(c, nvars: int) -> "LaurentPoly":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return LaurentPoly(nvars)
        return LaurentPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars)

    @staticmethod
    def one(nvars: int) -> "LaurentPoly":
        return LaurentPoly.constant(1, nvars)

    @staticmethod
    def variable(index: int, nvars: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * nvars
        exps[index] = power
        return LaurentPoly(nvars, {tuple(exps): QI.one()})

    @staticmethod
    def monomial(coeff, exps: Sequence[int]) -> "LaurentPoly":
        return LaurentPoly(len(exps), {tuple(exps): GaussianRational.coerce(coeff)})

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return QI.zero()
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPoly.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, QI.zero()) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                s = out.get(e, QI.zero()) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial; use RatFunc")
        out = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "LaurentPoly":
        c = GaussianRational.coerce(c)
        if c.is_zero():
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        return LaurentPoly(self.nvars, {_add_exps(e, exps): c for e, c in self.terms.items()})

    # -- structure ------------------------------------------------------------
    def min_exponents(self) -> tuple:
        if self.is_zero():
            return (0,) * self.nvars
        return tuple(min(e[j] for e in self.terms) for j in range(self.nvars))

    def max_exponents(self) -> tuple:
        if self.is_zero():
            return (0,) * self.nvars
        return tuple(max(e[j] for e in self.terms) for j in range(self.nvars))

    def leading_term(self) -> tuple:
        """(exps, coeff) of the graded-lex greatest term."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def eval_complex(self, point: Sequence[complex]) -> complex:
        if len(point) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = 0j
        for e, c in self.terms.items():
            v = c.to_complex()
            for x, k in zip(point, e):
                v *= x ** k
            total += v
        return total

    def eval_exact(self, point: Sequence[GaussianRational]) -> GaussianRational:
        if len(point) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = QI.zero()
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                v = v * (GaussianRational.coerce(x) ** k)
            total = total + v
        return total

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the quotient is not exact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        out: dict = {}
        le, lc = other.leading_term()
        while not rem.is_zero():
            re_, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re_, le))
            qc = rc / lc
            out[qe] = out.get(qe, QI.zero()) + qc
            rem = rem - other * LaurentPoly.monomial(qc, qe)
            if not rem.is_zero():
                ne, _ = rem.leading_term()
                if (sum(ne), ne) >= (sum(re_), re_):
                    raise ValueError("division is not exact")
        return LaurentPoly(self.nvars, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return poly_str(self)


def poly_str(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    if p.is_zero():
        return "0"
    if names is None:
        names = _default_names(p.nvars)
    bits = []
    for e in sorted(p.terms, key=lambda t: (sum(t), t), reverse=True):
        c = p.terms[e]
        mono = "*".join(
            (f"{names[j]}" if k == 1 else f"{names[j]}^{k}")
            for j, k in enumerate(e)
            if k != 0
        )
        cs = repr(c)
        if mono:
            if c.is_one():
                bits.append(mono)
            elif c == GaussianRational(-1):
                bits.append(f"-{mono}")
            else:
                bits.append(f"{cs}*{mono}")
        else:
            bits.append(cs)
    return " + ".join(bits).replace("+ -", "- ")


def _default_names(nvars: int) -> list[str]:
    if nvars == 1:
        return ["z"]
    if nvars == 2:
        return ["z", "w"]
    if nvars == 3:
        return ["z", "w", "u"]
    return [f"z{i}" for i in range(nvars)]


# ---------------------------------------------------------------------------
# gcd machinery (primitive PRS on nonneg-exponent polynomials)
# ---------------------------------------------------------------------------


def _split_by_main(p: LaurentPoly) -> dict[int, LaurentPoly]:
    """View p (nonneg exponents) as a univariate poly in the last variable."""
    coeffs: dict[int, dict] = {}
    for e, c in p.terms.items():
        coeffs.setdefault(e[-1], {})[e[:-1]] = c
    return {d: LaurentPoly(p.nvars - 1, t) for d, t in coeffs.items()}


def _join_main(coeffs: Mapping[int, LaurentPoly], nvars: int) -> LaurentPoly:
    terms = {}
    for d, q in coeffs.items():
        for e, c in q.terms.items():
            terms[e + (d,)] = c
    return LaurentPoly(nvars, terms)


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd of two polynomials with nonnegative exponents, monic-normalized
    (graded-lex leading coefficient 1).  gcd(0, g) = normalized g.
    """
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    if any(k < 0 for e in list(f.terms) + list(g.terms) for k in e):
        raise ValueError("poly_gcd expects nonnegative exponents")
    return _normalize(_gcd_rec(f, g))


def _normalize(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    _, lc = p.leading_term()
    return p.scale(lc.inv())


def _gcd_rec(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    n = f.nvars
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if n == 0:
        return LaurentPoly.one(0)
    if n == 1:
        return _gcd_uni(f, g)
    fc, fp = _content_primitive(f)
    gc, gp = _content_primitive(g)
    cont = _gcd_rec(fc, gc)
    a, b = fp, gp
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a = b
        if r.is_zero():
            b = r
        else:
            _, b = _content_primitive(r)
    # a is a gcd of the primitive parts; attach the content gcd
    cont_full = _join_main({0: cont}, n)
    return a * cont_full


def _gcd_uni(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    while not g.is_zero():
        f, g = g, _rem_uni(f, g)
    return f

def _rem_uni(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    (ge,), gc = g.leading_term()
    rem = f
    while not rem.is_zero():
        (re_,), rc = rem.leading_term()
        if re_ < ge:
            break
        rem = rem - g * LaurentPoly.monomial(rc / gc, (re_ - ge,))
    return rem


def _content_primitive(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Content (gcd of main-variable coefficients) and primitive part."""
    coeffs = _split_by_main(p)
    cont = LaurentPoly.zero(p.nvars - 1)
    for q in coeffs.values():
        cont = _gcd_rec(cont, q)
    cont = _normalize(cont)
    cont_full = _join_main({0: cont}, p.nvars)
    return cont, p.exact_div(cont_full)


def _pseudo_rem(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Pseudo-remainder of f by g in the last variable."""
    n = f.nvars
    fc = _split_by_main(f)
    gc = _split_by_main(g)
    dg = max(gc)
    lg = _join_main({0: gc[dg]}, n)
    rem = f
    while not rem.is_zero():
        rc = _split_by_main(rem)
        dr = max(rc)
        if dr < dg:
            break
        lr = _join_main({0: rc[dr]}, n)
        shift = [0] * n
        shift[-1] = dr - dg
        rem = rem * lg - g * lr.shift(shift)
    return rem


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced rational function num/den of Laurent polynomials.

    Canonical form: num and den share no polynomial factor, den has minimal
    exponent 0 in each variable and graded-lex leading coefficient 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, *, _reduced=False):
        if den is None:
            den = LaurentPoly.one(num.nvars)
        if num.nvars != den.nvars:
            raise ValueError("variable count mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if _reduced:
            self.num, self.den = num, den
        else:
            self.num, self.den = _reduce(num, den)

    # -- constructors -----------------------------------------------------
    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p)

    @staticmethod
    def constant(c, nvars: int) -> "RatFunc":
        return RatFunc(LaurentPoly.constant(c, nvars))

    @staticmethod
    def zero(nvars: int) -> "RatFunc":
        return RatFunc(LaurentPoly.zero(nvars), _reduced=False)

    @staticmethod
    def one(nvars: int) -> "RatFunc":
        return RatFunc(LaurentPoly.one(nvars))

    @staticmethod
    def variable(index: int, nvars: int, power: int = 1) -> "RatFunc":
        return RatFunc(LaurentPoly.variable(index, nvars, power))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc(other)
        return RatFunc.constant(other, self.nvars)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_unit_monomial(self) -> bool:
        """True iff the reduced form is coeff * monomial."""
        return self.num.is_monomial() and self.den.is_monomial()

    def is_polynomial(self) -> bool:
        """True iff the denominator is a unit of the Laurent ring."""
        return self.den.is_monomial()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError("not a Laurent polynomial")
        e, c = self.den.leading_term()
        return self.num.shift(tuple(-k for k in e)).scale(c.inv())

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverting zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation -----------------------------------------------------------
    def eval_complex(self, point: Sequence[complex]) -> complex:
        den = self.den.eval_complex(point)
        if den == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval_complex(point) / den

    def eval_exact(self, point: Sequence[GaussianRational]) -> GaussianRational:
        den = self.den.eval_exact(point)
        if den.is_zero():
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval_exact(point) / den

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == LaurentPoly.one(self.nvars):
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    nv = num.nvars
    if num.is_zero():
        return LaurentPoly.zero(nv), LaurentPoly.one(nv)
    # clear negative exponents jointly
    mins = tuple(min(a, b) for a, b in zip(num.min_exponents(), den.min_exponents()))
    lift = tuple(-min(m, 0) for m in mins)
    n_p = num.shift(lift)
    d_p = den.shift(lift)
    g = poly_gcd(n_p, d_p)
    if not (g.is_monomial() and g.is_constant()):
        n_p = n_p.exact_div(g)
        d_p = d_p.exact_div(g)
    # denominator: min exponent 0 per variable, leading coefficient 1
    dmin = d_p.min_exponents()
    back = tuple(-m for m in dmin)
    n_p = n_p.shift(back)
    d_p = d_p.shift(back)
    _, lc = d_p.leading_term()
    return n_p.scale(lc.inv()), d_p.scale(lc.inv())


# ---------------------------------------------------------------------------
# field descriptors used by the generic linear algebra
# ---------------------------------------------------------------------------


class GaussianField:
    """Field descriptor for Q(i)."""

    name = "QI"

    def zero(self):
        return QI.zero()

    def one(self):
        return QI.one()

    def coerce(self, x):
        return GaussianRational.coerce(x)

    def __eq__(self, other):
        return isinstance(other, GaussianField)

    def __hash__(self):
        return hash("GaussianField")

    def __repr__(self):
        return "QI"


class RationalFunctionField:
    """Field descriptor for Q(i)(t_1, ..., t_k)."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.name = f"RF({nvars})"

    def zero(self):
        return RatFunc.zero(self.nvars)

    def one(self):
        return RatFunc.one(self.nvars)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return x
        if isinstance(x, LaurentPoly):
            return RatFunc(x)
        return RatFunc.constant(x, self.nvars)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("RationalFunctionField", self.nvars))

    def __repr__(self):
        return self.name


QI_FIELD = GaussianField()

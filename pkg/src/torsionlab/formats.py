"""Versioned JSON wire formats for complexes, representations, orbit lists,
and cohomology actions.

All exact numbers are integer pairs (numerator, denominator); no floats
appear in exact files.  Serialization is canonical (sorted keys, fixed
separators) so that serialize -> parse -> serialize is bit-exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import numpy as np

from .dynamics import ClosedOrbit, CohomologyAction, OrbitSeries
from .errors import FormatError
from .groupring import GroupRingElt, Word
from .linalg import ExactMatrix
from .scalars import QI, QI_FIELD, LaurentPoly, RatFunc
from .twisted import GroupRingComplex, MatrixRep, Rank1Rep

SCHEMA_VERSION = 1

_ROOTS = {(0, 1): QI(1), (0, 2): QI(1), (1, 2): QI(-1), (0, 4): QI(1),
          (1, 4): QI(0, 1), (2, 4): QI(-1), (3, 4): QI(0, -1)}


def canonical_dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _check_format(doc: dict, what: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError(f"{what}: top level must be an object")
    if doc.get("format") != SCHEMA_VERSION:
        raise FormatError(f"{what}: missing or unsupported format version (need {SCHEMA_VERSION})")


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


# ---------------------------------------------------------------------------
# group-ring complexes
# ---------------------------------------------------------------------------


def complex_to_json(c: GroupRingComplex) -> dict:
    def entry(e: GroupRingElt) -> list:
        items = sorted(e.terms.items(), key=lambda kv: (len(kv[0].letters), kv[0].letters))
        return [[n, 1, list(w.letters)] for w, n in items]

    return {
        "format": SCHEMA_VERSION,
        "generators": c.generators,
        "relators": [list(w.letters) for w in c.relators],
        "shape": list(c.shape.k),
        "diffs": [[[entry(e) for e in row] for row in d] for d in c.diffs],
    }


def complex_from_json(doc: dict) -> GroupRingComplex:
    _check_format(doc, "complex file")
    for key in ("generators", "relators", "shape", "diffs"):
        _expect(key in doc, f"complex file: missing key {key!r}")
    gens = doc["generators"]
    _expect(isinstance(gens, int) and gens >= 0, "complex file: generators must be a count")
    relators = []
    for w in doc["relators"]:
        _expect(isinstance(w, list) and all(isinstance(x, int) and x != 0 for x in w),
                "complex file: relators are lists of nonzero ints")
        relators.append(Word(w))
    shape = doc["shape"]
    _expect(isinstance(shape, list) and all(isinstance(k, int) and k >= 0 for k in shape),
            "complex file: shape must be a list of counts")

    def parse_entry(raw) -> GroupRingElt:
        _expect(isinstance(raw, list), "complex file: entry must be a list of terms")
        terms: dict[Word, int] = {}
        for term in raw:
            _expect(isinstance(term, list) and len(term) == 3, "complex file: term must be [num, den, word]")
            num, den, letters = term
            _expect(isinstance(num, int) and isinstance(den, int), "complex file: coefficients are integer pairs")
            _expect(den == 1, "complex file: group-ring coefficients must have denominator 1")
            _expect(isinstance(letters, list) and all(isinstance(x, int) and x != 0 for x in letters),
                    "complex file: word must be a list of nonzero ints")
            w = Word(letters)
            terms[w] = terms.get(w, 0) + num
        return GroupRingElt(terms)

    diffs = []
    raw_diffs = doc["diffs"]
    _expect(isinstance(raw_diffs, list) and len(raw_diffs) == max(len(shape) - 1, 0),
            "complex file: need one differential per consecutive degree pair")
    for i, d in enumerate(raw_diffs):
        _expect(isinstance(d, list) and len(d) == shape[i + 1], f"complex file: d^{i} row count")
        rows = []
        for row in d:
            _expect(isinstance(row, list) and len(row) == shape[i], f"complex file: d^{i} column count")
            rows.append([parse_entry(e) for e in row])
        diffs.append(rows)
    try:
        return GroupRingComplex(gens, relators, shape, diffs)
    except Exception as exc:
        raise FormatError(f"complex file: {exc}") from exc


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


def rep_to_json(rho: Rank1Rep | MatrixRep) -> dict:
    if isinstance(rho, MatrixRep):
        return {
            "format": SCHEMA_VERSION,
            "kind": "matrix",
            "images": [
                [[[float(x.real), float(x.imag)] for x in row] for row in m]
                for m in rho.images
            ],
        }
    images = []
    for c, e in zip(rho.coeffs, rho.exps):
        images.append({"root_of_unity": list(_root_pair(c)), "exponents": list(e)})
    doc = {
        "format": SCHEMA_VERSION,
        "kind": "rank1-numeric" if rho.is_numeric() else "rank1-symbolic",
        "nvars": rho.nvars,
        "images": images,
    }
    if rho.is_numeric():
        doc["point"] = [[x.real, x.imag] for x in rho.point]
    return doc


def _root_pair(c: QI) -> tuple[int, int]:
    for (p, q), val in _ROOTS.items():
        if val == c and q == 4:
            return p, q
    if c == QI(1):
        return 0, 1
    raise FormatError("coefficient is not a representable root of unity")


def rep_from_json(doc: dict, relators: list[Word] | None = None) -> Rank1Rep | MatrixRep:
    _check_format(doc, "representation file")
    kind = doc.get("kind")
    if kind == "matrix":
        raw = doc.get("images")
        _expect(isinstance(raw, list) and raw, "representation file: matrix kind needs images")
        mats = []
        for m in raw:
            try:
                mats.append(np.array([[complex(x[0], x[1]) for x in row] for row in m]))
            except (TypeError, IndexError) as exc:
                raise FormatError("representation file: bad matrix entry") from exc
        try:
            return MatrixRep(mats, relators or ())
        except Exception as exc:
            raise FormatError(f"representation file: {exc}") from exc
    if kind not in ("rank1-symbolic", "rank1-numeric"):
        raise FormatError(f"representation file: unknown kind {kind!r}")
    nvars = doc.get("nvars")
    _expect(isinstance(nvars, int) and nvars >= 0, "representation file: nvars must be a count")
    coeffs, exps = [], []
    for img in doc.get("images", []):
        _expect(isinstance(img, dict), "representation file: image must be an object")
        root = img.get("root_of_unity", [0, 1])
        _expect(
            isinstance(root, list) and len(root) == 2 and all(isinstance(x, int) for x in root),
            "representation file: root_of_unity must be [p, q]",
        )
        p, q = root
        _expect(q in (1, 2, 4), "representation file: exact roots of unity need q | 4")
        coeffs.append(_ROOTS[(p % q, q)])
        e = img.get("exponents")
        _expect(
            isinstance(e, list) and len(e) == nvars and all(isinstance(x, int) for x in e),
            "representation file: exponents must be an integer vector of length nvars",
        )
        exps.append(tuple(e))
    point = None
    if kind == "rank1-numeric":
        raw_pt = doc.get("point")
        _expect(
            isinstance(raw_pt, list) and len(raw_pt) == nvars,
            "representation file: rank1-numeric needs one point value per variable",
        )
        point = [complex(x[0], x[1]) for x in raw_pt]
        _expect(all(v != 0 for v in point), "representation file: point values must be invertible")
    try:
        return Rank1Rep(nvars, coeffs, exps, point)
    except ValueError as exc:
        raise FormatError(f"representation file: {exc}") from exc


# ---------------------------------------------------------------------------
# orbit lists
# ---------------------------------------------------------------------------


def orbits_to_json(orbits: OrbitSeries) -> dict:
    out = []
    for o in orbits:
        rec = {
            "word": list(o.class_word.letters),
            "period": o.period,
            "sign": o.sign,
            "par_minus": o.parity_minus,
            "par_plus": o.parity_plus,
            "filtration": o.filtration,
        }
        if o.count != 1:
            rec["count"] = o.count
        out.append(rec)
    return {"format": SCHEMA_VERSION, "orbits": out}


def orbits_from_json(doc: dict) -> OrbitSeries:
    _check_format(doc, "orbit file")
    raw = doc.get("orbits")
    _expect(isinstance(raw, list), "orbit file: missing orbits list")
    out = []
    for rec in raw:
        _expect(isinstance(rec, dict), "orbit file: each orbit is an object")
        for key in ("word", "period", "sign", "par_minus", "par_plus", "filtration"):
            _expect(key in rec, f"orbit file: orbit missing {key!r}")
        _expect(rec["sign"] in (1, -1), "orbit file: sign must be +-1")
        _expect(isinstance(rec["period"], int) and rec["period"] >= 1, "orbit file: period must be >= 1")
        filt = rec["filtration"]
        _expect(isinstance(filt, (int, float)) and filt > 0, "orbit file: filtration must be positive")
        count = rec.get("count", 1)
        _expect(isinstance(count, int) and count >= 1, "orbit file: count must be a positive integer")
        try:
            out.append(
                ClosedOrbit(
                    class_word=Word(rec["word"]),
                    period=rec["period"],
                    sign=rec["sign"],
                    parity_minus=bool(rec["par_minus"]),
                    parity_plus=bool(rec["par_plus"]),
                    filtration=float(filt),
                    count=count,
                )
            )
        except ValueError as exc:
            raise FormatError(f"orbit file: {exc}") from exc
    try:
        return OrbitSeries(out)
    except ValueError as exc:
        raise FormatError(f"orbit file: {exc}") from exc


# ---------------------------------------------------------------------------
# cohomology actions
# ---------------------------------------------------------------------------


def action_to_json(act: CohomologyAction) -> dict:
    degrees = []
    for m in act.degrees:
        rows = []
        for i in range(m.rows):
            row = []
            for j in range(m.cols):
                v = m[i, j]
                if isinstance(v, RatFunc):
                    v = v.as_laurent().constant_value()
                if isinstance(v, LaurentPoly):
                    v = v.constant_value()
                if not v.is_rational():
                    raise FormatError("action file stores rational entries only")
                row.append([v.re.numerator, v.re.denominator])
            rows.append(row)
        degrees.append(rows)
    return {"format": SCHEMA_VERSION, "degrees": degrees}


def action_from_json(doc: dict) -> CohomologyAction:
    _check_format(doc, "action file")
    raw = doc.get("degrees")
    _expect(isinstance(raw, list) and raw, "action file: missing degrees")
    mats = []
    for k, rows in enumerate(raw):
        _expect(isinstance(rows, list), f"action file: degree {k} must be a matrix")
        n = len(rows)
        flat = []
        for row in rows:
            _expect(isinstance(row, list) and len(row) == n, f"action file: degree {k} must be square")
            for cell in row:
                _expect(
                    isinstance(cell, list) and len(cell) == 2 and all(isinstance(x, int) for x in cell),
                    "action file: entries are integer pairs [num, den]",
                )
                _expect(cell[1] != 0, "action file: zero denominator")
                flat.append(QI(Fraction(cell[0], cell[1])))
        mats.append(ExactMatrix(n, n, flat, QI_FIELD))
    return CohomologyAction(mats)


# ---------------------------------------------------------------------------
# symbolic values (sidecar files)
# ---------------------------------------------------------------------------


def laurent_to_json(p: LaurentPoly) -> dict:
    terms = []
    for e in sorted(p.terms, key=lambda t: (sum(t), t)):
        c = p.terms[e]
        terms.append(
            [
                [c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator],
                list(e),
            ]
        )
    return {"nvars": p.nvars, "terms": terms}


def laurent_from_json(doc: dict) -> LaurentPoly:
    _expect(isinstance(doc, dict) and "nvars" in doc and "terms" in doc, "bad polynomial record")
    terms = {}
    for coeff, e in doc["terms"]:
        rn, rd, imn, imd = coeff
        terms[tuple(e)] = QI(Fraction(rn, rd), Fraction(imn, imd))
    return LaurentPoly(doc["nvars"], terms)


def ratfunc_to_json(r: RatFunc) -> dict:
    return {"num": laurent_to_json(r.num), "den": laurent_to_json(r.den)}


def ratfunc_from_json(doc: dict) -> RatFunc:
    _expect(isinstance(doc, dict) and "num" in doc and "den" in doc, "bad rational-function record")
    return RatFunc(laurent_from_json(doc["num"]), laurent_from_json(doc["den"]))


def load_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def save_json(path, doc: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(doc))

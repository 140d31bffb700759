"""Curated worked examples: circle, 2-torus, trefoil and figure-eight
exteriors, and the cat-map mapping torus (complex, orbit list, cohomology
action), each with an expected-value sidecar frozen at build time.

The corpus directory ships inside the package; the TORSIONLAB_CORPUS
environment variable overrides it.
"""

from __future__ import annotations

import os
from pathlib import Path

from . import formats
from .dynamics import lefschetz_aggregate, lefschetz_numbers
from .errors import FormatError, TorsionLabError
from .scalars import RatFunc
from .twisted import alexander_from_torsion, milnor_turaev, Presentation

CAT_MAP = ((2, 1), (1, 1))

COMPLEXES = ("circle", "torus2", "trefoil", "figure8", "catmap_torus")
REPS = {
    "circle": "circle_rep",
    "torus2": "torus2_rep",
    "trefoil": "knot_abelian_rep",
    "figure8": "knot_abelian_rep",
    "catmap_torus": "catmap_rep",
}
KNOTS = ("trefoil", "figure8")


def corpus_dir() -> Path:
    env = os.environ.get("TORSIONLAB_CORPUS")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "corpus"


def corpus_path(name: str) -> Path:
    return corpus_dir() / f"{name}.json"


def load_complex(name: str):
    return formats.complex_from_json(formats.load_json(corpus_path(name)))


def load_rep(name: str, relators=None):
    return formats.rep_from_json(formats.load_json(corpus_path(name)), relators)


def load_orbits(name: str = "catmap_orbits"):
    return formats.orbits_from_json(formats.load_json(corpus_path(name)))


def load_action(name: str = "catmap_action"):
    return formats.action_from_json(formats.load_json(corpus_path(name)))


def load_expected(name: str) -> dict:
    return formats.load_json(corpus_dir() / f"{name}.expected.json")


def validate_corpus() -> list[tuple[str, bool, str]]:
    """Re-derive every sidecar value and compare; also round-trip each file
    through the canonical serializer (must be bit-exact)."""
    results: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = ""):
        results.append((name, ok, detail))

    for name in COMPLEXES:
        path = corpus_path(name)
        try:
            raw = path.read_text(encoding="utf-8")
            doc = formats.load_json(path)
            c = formats.complex_from_json(doc)
            round_trip = formats.canonical_dumps(formats.complex_to_json(c))
            record(f"{name}: round-trip", round_trip == raw, "canonical serialization differs" if round_trip != raw else "")
            rho = load_rep(REPS[name])
            expected = load_expected(name)
            tau = milnor_turaev(c, rho)
            want = formats.ratfunc_from_json(expected["torsion"])
            record(f"{name}: torsion", tau == want, "" if tau == want else f"got {tau}")
            if name in KNOTS:
                pres = Presentation(c.generators, c.relators)
                alex = alexander_from_torsion(pres)
                want_a = formats.laurent_from_json(expected["alexander"])
                record(f"{name}: alexander", alex == want_a, "" if alex == want_a else f"got {alex}")
        except (TorsionLabError, OSError, KeyError) as exc:
            record(f"{name}: load", False, str(exc))

    try:
        act = load_action()
        expected = load_expected("catmap_action")
        zeta = RatFunc.variable(0, 1)
        from .dynamics import lefschetz_zeta

        got = lefschetz_zeta(act, zeta)
        want = formats.ratfunc_from_json(expected["zeta_symbolic"])
        record("catmap_action: zeta", got == want, "" if got == want else f"got {got}")
    except (TorsionLabError, OSError, KeyError) as exc:
        record("catmap_action: load", False, str(exc))

    try:
        orbits = load_orbits()
        expected = load_expected("catmap_orbits")
        want_l = expected["lefschetz"]
        ls = lefschetz_numbers(CAT_MAP, len(want_l))
        ok = ls == want_l and all(
            lefschetz_aggregate(orbits, n) == want_l[n - 1] for n in range(1, len(want_l) + 1)
        )
        record("catmap_orbits: lefschetz aggregation", ok, "" if ok else "signed counts disagree")
        raw = corpus_path("catmap_orbits").read_text(encoding="utf-8")
        rt = formats.canonical_dumps(formats.orbits_to_json(orbits))
        record("catmap_orbits: round-trip", rt == raw, "")
    except (TorsionLabError, OSError, KeyError) as exc:
        record("catmap_orbits: load", False, str(exc))

    return results

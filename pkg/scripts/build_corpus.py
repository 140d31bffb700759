#!/usr/bin/env python3
"""Regenerate the frozen corpus JSON files and their expected-value sidecars.

Run from the repository root:  python3 scripts/build_corpus.py
The committed files are the frozen oracle; rerunning must be a no-op unless
the constructions themselves change.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from torsionlab import formats
from torsionlab.corpus import CAT_MAP
from torsionlab.dynamics import (
    ChainMapData,
    CohomologyAction,
    identity_chain_map,
    lefschetz_numbers,
    lefschetz_zeta,
    mapping_torus_complex,
    suspension_orbits,
)
from torsionlab.groupring import GroupRingElt, Word, fox_derivative
from torsionlab.linalg import ExactMatrix
from torsionlab.scalars import QI, QI_FIELD, RatFunc
from torsionlab.twisted import (
    Presentation,
    Rank1Rep,
    alexander_from_torsion,
    milnor_turaev,
    presentation_complex,
)

OUT = Path(__file__).resolve().parent.parent / "src" / "torsionlab" / "corpus"

TREFOIL_REL = Word([1, 2, 1, -2, -1, -2])
# 2-bridge b(5,3) relator a w b^-1 w^-1 with w = b a^-1 b^-1 a
_W = Word([2, -1, -2, 1])
FIGURE8_REL = Word([1]) * _W * Word([-2]) * _W.inverse()


def write(name: str, doc: dict) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    formats.save_json(OUT / f"{name}.json", doc)
    print("wrote", name)


def write_expected(name: str, doc: dict) -> None:
    formats.save_json(OUT / f"{name}.expected.json", doc)
    print("wrote", name, "(expected)")


def build_catmap_chain_map():
    base = presentation_complex(Presentation(2, [Word([1, 2, -1, -2])]))
    one = GroupRingElt.one()
    im_a, im_b = Word([1, 1, 2]), Word([1, 2])
    phi1 = [
        [fox_derivative(im_a, 1), fox_derivative(im_b, 1)],
        [fox_derivative(im_a, 2), fox_derivative(im_b, 2)],
    ]
    return ChainMapData(base, [[[one]], phi1, [[one]]], [im_a, im_b])


def main() -> None:
    # complexes
    circle = presentation_complex(Presentation(1, []))
    torus2 = presentation_complex(Presentation(2, [Word([1, 2, -1, -2])]))
    trefoil = presentation_complex(Presentation(2, [TREFOIL_REL]))
    figure8 = presentation_complex(Presentation(2, [FIGURE8_REL]))
    catmap = mapping_torus_complex(build_catmap_chain_map())

    write("circle", formats.complex_to_json(circle))
    write("torus2", formats.complex_to_json(torus2))
    write("trefoil", formats.complex_to_json(trefoil))
    write("figure8", formats.complex_to_json(figure8))
    write("catmap_torus", formats.complex_to_json(catmap))

    # representations
    circle_rep = Rank1Rep.variables(1)
    torus2_rep = Rank1Rep.variables(2)
    knot_rep = Rank1Rep.abelianized(2)
    catmap_rep = Rank1Rep(1, [QI(1)] * 3, [(0,), (0,), (1,)])
    catmap_rep_num = Rank1Rep(1, [QI(1)] * 3, [(0,), (0,), (1,)], point=[0.1])
    write("circle_rep", formats.rep_to_json(circle_rep))
    write("torus2_rep", formats.rep_to_json(torus2_rep))
    write("knot_abelian_rep", formats.rep_to_json(knot_rep))
    write("catmap_rep", formats.rep_to_json(catmap_rep))
    write("catmap_rep_numeric", formats.rep_to_json(catmap_rep_num))

    # cohomology action of the cat map (H^0, H^1, H^2 of the torus)
    f0 = ExactMatrix.from_rows([[QI(1)]], QI_FIELD)
    f1 = ExactMatrix.from_rows([[QI(2), QI(1)], [QI(1), QI(1)]], QI_FIELD)
    f2 = ExactMatrix.from_rows([[QI(1)]], QI_FIELD)
    action = CohomologyAction([f0, f1, f2])
    write("catmap_action", formats.action_to_json(action))

    # orbit list to filtration 30 (monodromy letter is generator 3 = s)
    orbits = suspension_orbits(CAT_MAP, 30, monodromy_gen=3)
    write("catmap_orbits", formats.orbits_to_json(orbits))

    # expected sidecars
    for name, cpx, rho in [
        ("circle", circle, circle_rep),
        ("torus2", torus2, torus2_rep),
        ("trefoil", trefoil, knot_rep),
        ("figure8", figure8, knot_rep),
        ("catmap_torus", catmap, catmap_rep),
    ]:
        doc = {"torsion": formats.ratfunc_to_json(milnor_turaev(cpx, rho))}
        if name in ("trefoil", "figure8"):
            pres = Presentation(cpx.generators, cpx.relators)
            doc["alexander"] = formats.laurent_to_json(alexander_from_torsion(pres))
        write_expected(name, doc)

    zeta = lefschetz_zeta(action, RatFunc.variable(0, 1))
    write_expected("catmap_action", {"zeta_symbolic": formats.ratfunc_to_json(zeta)})
    write_expected("catmap_orbits", {"lefschetz": lefschetz_numbers(CAT_MAP, 10)})


if __name__ == "__main__":
    main()

import json
from importlib import resources

import pytest

from liedef.errors import InvalidInput, NotSolvable
from liedef.exact import RatMatrix
from liedef.groups import (DEFINABLE, INVALID_PRESENTATION, NOT_DEFINABLE, GroupPresentation,
                           affine_line, catalog, catalog_entry, classify_group,
                           classify_simply_connected, e2tilde, e2tilde_group, heisenberg,
                           presentation_from_json, r2_so2, recheck, sl2, upper_triangular,
                           validate_presentation)
from liedef.liealg import abelian, matrix_lie_algebra
from liedef.samples import random_invertible
from liedef.solvclass import COMPLETELY_SOLVABLE

ROT = RatMatrix([[0, 1], [-1, 0]])


def pres(d):
    return GroupPresentation(abelian(2), 1, (RatMatrix(d),))


def test_validate_examples():
    certs = validate_presentation(pres([[0, 1], [-1, 0]]))
    assert [c["rule"] for c in certs] == ["shape", "derivation", "commutation", "semisimple",
                                          "imaginary-spectrum"]
    v = classify_group(pres([[1, 0], [0, 1]]))
    assert v.kind == INVALID_PRESENTATION and v.reason["rule"] == "imaginary-spectrum"
    v = classify_group(pres([[0, 1], [0, 0]]))
    assert v.kind == INVALID_PRESENTATION and v.reason["rule"] == "semisimple"


def test_validate_other_rules():
    v = classify_group(GroupPresentation(heisenberg(), 1, (RatMatrix.identity(3),)))
    assert v.reason["rule"] == "derivation"
    v = classify_group(GroupPresentation(abelian(2), 2, (ROT,)))
    assert v.reason["rule"] == "shape"
    v = classify_group(GroupPresentation(abelian(2), 1, (RatMatrix.identity(3),)))
    assert v.reason["rule"] == "shape"
    # two rotations in different planes of R^4 commute; a rotation and a shear do not
    r1 = RatMatrix.block_diagonal([ROT, RatMatrix.zero(2)])
    r2 = RatMatrix.block_diagonal([RatMatrix.zero(2), ROT])
    assert classify_group(GroupPresentation(abelian(4), 2, (r1, r2))).kind == DEFINABLE
    r3 = RatMatrix.block_diagonal([ROT, RatMatrix([[0, 2], [-1, 0]])])
    assert classify_group(GroupPresentation(abelian(4), 2, (r1, r3))).kind == DEFINABLE
    v = classify_group(GroupPresentation(abelian(4), 2, (r1, RatMatrix.elementary(4, 0, 2))))
    assert v.reason["rule"] == "commutation"


def test_imaginary_spectrum_cases():
    # [[0, 2], [-1, 0]] has eigenvalues +-i sqrt2: irrational but imaginary
    assert classify_group(pres([[0, 2], [-1, 0]])).kind == DEFINABLE
    # eigenvalues +-1 +- i
    assert classify_group(pres([[1, 1], [-1, 1]])).reason["rule"] == "imaginary-spectrum"
    assert classify_group(pres([[0, 0], [0, 0]])).kind == DEFINABLE


def test_classify_simply_connected():
    assert classify_simply_connected(heisenberg()).kind == DEFINABLE
    v = classify_simply_connected(e2tilde())
    assert v.kind == NOT_DEFINABLE
    assert v.reason["solvability"]["witness"]["basis"] == "X"
    assert v.reason["solvability"]["witness"]["factor"] == ["1", "0", "1"]
    assert classify_simply_connected(upper_triangular(3)).kind == DEFINABLE
    with pytest.raises(NotSolvable):
        classify_simply_connected(sl2())


def test_classify_group_examples():
    assert classify_group(r2_so2()).kind == DEFINABLE
    assert classify_group(e2tilde_group()).kind == NOT_DEFINABLE
    assert classify_group(GroupPresentation(affine_line())).kind == DEFINABLE
    v = classify_group(GroupPresentation(sl2()))
    assert v.kind == INVALID_PRESENTATION and v.reason["rule"] == "solvable"


def test_definable_reasons_recheck():
    p = r2_so2()
    v = classify_group(p)
    assert recheck(v, p)
    js = v.to_json()
    assert js["reason"]["solvability"]["kind"] == COMPLETELY_SOLVABLE
    assert js["reason"]["torus"][-1]["rule"] == "imaginary-spectrum"


def test_catalog_expected(entries):
    names = [e.name for e in entries]
    assert names == ["abelian1", "abelian2", "abelian3", "heisenberg", "affine", "t2", "t3", "s3",
                     "e2tilde", "sqrt2", "sl2", "r2-so2", "e2tilde-group"]
    for e in entries:
        assert e.observed() == e.expected, e.name


def test_catalog_lookup():
    assert catalog_entry("heisenberg").expected == {"solvable": True, "nilpotent": True,
                                                    "complete": "CompletelySolvable",
                                                    "definability": "Definable"}
    assert catalog_entry("e2tilde").expected["definability"] == NOT_DEFINABLE
    assert catalog_entry("sl2").expected["complete"] == "NotSolvable"
    with pytest.raises(InvalidInput):
        catalog_entry("nope")


def test_shipped_files_match_builders(entries, payloads):
    for e in entries:
        assert e.payload.to_json() == payloads[e.name].to_json()


def test_matrix_algebras_match_commutators():
    t2 = upper_triangular(2)
    e11, e22, e12 = (RatMatrix.elementary(2, i, j) for i, j in [(0, 0), (1, 1), (0, 1)])
    assert t2.basis_names == ("E11", "E22", "E12")
    assert t2.to_json()["brackets"] == matrix_lie_algebra([e11, e22, e12], ["E11", "E22", "E12"],
                                                          name="t2").to_json()["brackets"]
    # e2tilde from its 3x3 matrix model: E1, E2 translations, X rotation generator
    m_e1 = RatMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    m_e2 = RatMatrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    m_x = RatMatrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    g = matrix_lie_algebra([m_e1, m_e2, m_x], ["E1", "E2", "X"])
    assert g.structure_constants == e2tilde().structure_constants


def test_group_invariants(entries, rng):
    for e in entries:
        p = e.presentation
        if e.kind == "algebra" and e.expected["solvable"]:
            assert classify_group(p).kind == classify_simply_connected(e.algebra).kind
        kind = classify_group(p).kind
        for _ in range(3):
            q = p.change_basis(random_invertible(rng, p.f.dim))
            assert classify_group(q).kind == kind
    assert classify_group(r2_so2()).kind == DEFINABLE and classify_group(e2tilde_group()).kind == NOT_DEFINABLE


def test_presentation_json():
    p = r2_so2()
    assert presentation_from_json(json.loads(json.dumps(p.to_json()))).to_json() == p.to_json()
    with pytest.raises(InvalidInput) as info:
        presentation_from_json({"f": abelian(2).to_json(), "torus_rank": -1})
    assert info.value.field == "torus_rank"
    with pytest.raises(InvalidInput) as info:
        presentation_from_json({"f": abelian(2).to_json(), "torus_rank": 1,
                                "derivations": [[["0", "x"], ["0", "0"]]]})
    assert info.value.field.startswith("derivations[0]")
    with pytest.raises(InvalidInput) as info:
        presentation_from_json({"f": {"basis": ["a"], "dim": 2}})
    assert info.value.field == "f.dim"


def test_catalog_index_is_packaged():
    text = resources.files("liedef").joinpath("data", "catalog.json").read_text()
    assert len(json.loads(text)["entries"]) == len(catalog())
